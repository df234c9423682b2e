import logging
from dataclasses import dataclass, field
from typing import List, Sequence

from sparsekron.errors import PreconditionViolated
from sparsekron.kronecker import SubstitutionSpec
from sparsekron.poly import Term, UniPoly

logger = logging.getLogger(__name__)


@dataclass
class CandidateSet:
    """
    Candidate terms read off one substitution (d, p) and its n shifted
    variants. Exponent vectors are pairwise distinct and every candidate has
    total degree below the degree bound.
    """

    candidates: List[Term]
    d: int
    p: int
    operations: int = field(default=0, compare=False)

    def __len__(self) -> int:
        return len(self.candidates)

    def __iter__(self):
        return iter(self.candidates)


def ts_terms(fmod: UniPoly,
             f_dp: UniPoly,
             f_dpk: Sequence[UniPoly],
             d: int,
             p: int,
             D: int,
             *,
             check: bool = False) -> CandidateSet:
    """
    Extract candidate multivariate terms from the images of f under (d, p).

    For each term a*x^r of `fmod`, the residue class r must hold exactly one
    term a*x^gamma of `f_dp` and exactly one term a*x^beta_k of every shifted
    image `f_dpk[k]`. The exponents e_k = (beta_k - gamma) / p must be
    nonnegative integers, must rebuild gamma through the weights d^{k-1} mod p,
    and must sum to less than D. Survivors become a*x1^e_1...xn^e_n.

    Args:
        fmod: f_dp reduced modulo x^p - 1.
        f_dp: the image under x_i -> x^{d^{i-1} mod p}.
        f_dpk: the n images with coordinate k shifted by p, k = 1..n.
        d: substitution base.
        p: substitution prime.
        D: strict bound on the total degree.
        check: verify that every image reduces to `fmod`.

    Returns:
        The candidate set, with a count of the ring operations spent.

    Raises:
        PreconditionViolated: in check mode, if some image does not reduce to
            `fmod` modulo x^p - 1.
    """
    n = len(f_dpk)
    if check:
        for label, image in [("f_(d,p)", f_dp)] + [
                (f"f_(d,p,{k})", g) for k, g in enumerate(f_dpk, start=1)]:
            if image.mod_cyclic(p) != fmod:
                raise PreconditionViolated(
                    f"{label} does not reduce to the cyclic image for d={d}, p={p}"
                )

    weights = SubstitutionSpec(n, d, p).weights
    base_groups = f_dp.residue_groups(p)
    shifted_groups = [g.residue_groups(p) for g in f_dpk]

    candidates: List[Term] = []
    operations = 0
    for r, a in fmod.items():
        group = base_groups.get(r, [])
        operations += 1
        if len(group) != 1 or group[0][1] != a:
            continue
        gamma = group[0][0]

        exps = []
        for groups in shifted_groups:
            operations += 1
            shifted = groups.get(r, [])
            if len(shifted) != 1 or shifted[0][1] != a:
                break
            e, remainder = divmod(shifted[0][0] - gamma, p)
            if remainder != 0 or e < 0:
                break
            exps.append(e)
        if len(exps) != n:
            continue

        operations += n
        if not _rebuilds_gamma(exps, weights, gamma):
            continue
        if sum(exps) >= D:
            continue
        candidates.append((a, tuple(exps)))

    logger.debug(f"TS terms for (d={d}, p={p}): {len(candidates)} of "
                 f"{fmod.num_terms} residues survive")
    return CandidateSet(candidates=candidates, d=d, p=p, operations=operations)


def _rebuilds_gamma(exps: Sequence[int], weights: Sequence[int], gamma: int) -> bool:
    return sum(e * w for e, w in zip(exps, weights)) == gamma
