"""A scikit-learn style transformer around the builder.

Each sample is one text; ``transform`` maps texts to their RLBWTs and
``inverse_transform`` decodes them back. Nothing is learned, so ``fit``
only validates the parameters, but the class composes with pipelines and
supports ``get_params``/``set_params``/``clone``.
"""

from __future__ import annotations

from sklearn.base import BaseEstimator, TransformerMixin

from .builder import rcomp_build
from .graph import MIN_ALPHA
from .grouped import DEFAULT_GROUP_SIZE
from .text import invert_rlbwt
from .validation import check_alpha, check_backend, check_rlbwts, check_texts


class RlbwtTransformer(TransformerMixin, BaseEstimator):
    def __init__(self, alpha: int = MIN_ALPHA, backend: str = "plain",
                 group_size: int = DEFAULT_GROUP_SIZE) -> None:
        self.alpha = alpha
        self.backend = backend
        self.group_size = group_size

    def fit(self, X, y=None):
        check_alpha(self.alpha)
        check_backend(self.backend)
        check_texts(X)
        self.is_fitted_ = True
        return self

    def transform(self, X):
        alpha = check_alpha(self.alpha)
        backend = check_backend(self.backend)
        results = [rcomp_build(text, alpha=alpha, backend=backend, group_size=self.group_size)
                   for text in check_texts(X)]
        self.stats_ = [stats for _, stats in results]
        return [rlbwt for rlbwt, _ in results]

    def inverse_transform(self, X):
        return [invert_rlbwt(item) for item in check_rlbwts(X)]

    def __sklearn_tags__(self):
        tags = super().__sklearn_tags__()
        tags.requires_fit = False
        return tags
