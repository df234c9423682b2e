from textwrap import dedent
from typing import IO, Optional

import click
from click import ClickException


def format_multiline(msg: str) -> str:
    return dedent(msg).strip()


class CLIError(ClickException):
    """
    A failure reported to the user as one machine-readable line,
    `error[<code_name>]: <message>`, with a dedicated exit code.
    """

    exit_code = 2
    code_name = "config"

    def format_message(self) -> str:
        return f"error[{self.code_name}]: {format_multiline(self.message)}"

    def show(self, file: Optional[IO] = None) -> None:
        click.echo(click.style(self.format_message(), fg="red"), err=True, file=file)


class ConfigError(CLIError):
    pass


class InputParseError(CLIError):
    code_name = "parse"


class BoundsError(CLIError):
    exit_code = 3
    code_name = "bounds"


class RingError(CLIError):
    exit_code = 4
    code_name = "ring"


class PropertyError(CLIError):
    exit_code = 1
    code_name = "property"
