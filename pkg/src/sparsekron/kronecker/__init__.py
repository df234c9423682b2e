from .substitution import (SubstitutionSpec, UniOracle, image_degree_bound,
                           image_point, interpolate_image, interpolate_images,
                           substitute_sparse)

__all__ = [
    "SubstitutionSpec",
    "UniOracle",
    "image_degree_bound",
    "image_point",
    "interpolate_image",
    "interpolate_images",
    "substitute_sparse",
]
