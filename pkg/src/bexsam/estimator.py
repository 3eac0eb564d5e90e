import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .discovery import TIE_TOL, VOID, discover
from .evaluation import adjacency_from_estimate
from .freqtable import FrequencyTable
from .generator import Dataset
from .validation import DEFAULT_MAX_WIDTH, check_binary_matrix


class BExSAM(TransformerMixin, BaseEstimator):
    """Causal discovery for binary data with skewed exclusive-or noise.

    Parameters
    ----------
    max_width : int, default=24
        Largest number of columns accepted. The frequency table holds
        ``2**n_features`` entries.
    tie_tol : float, default=1e-12
        Sorted-MI scores within this distance of the minimum are treated as
        tied; the lowest column index wins.

    Attributes
    ----------
    causal_order_ : ndarray of shape (n_features,)
        Column indices from causally first to last.
    adjacency_matrix_ : ndarray of shape (n_features, n_features)
        ``adjacency_matrix_[h, j] == 1`` when ``x_h`` is an estimated parent
        of ``x_j``.
    truth_tables_ : list of TruthTableEstimate
        Indexed by column.
    mi_scores_ : ndarray of shape (n_features,)
        Sorted MI of each column at the step where it was eliminated.
    result_ : DiscoveryResult

    Examples
    --------
    >>> from bexsam import BExSAM
    >>> X = [[0, 0], [0, 0], [0, 0], [1, 1], [1, 1], [0, 1], [1, 1], [0, 0]]
    >>> BExSAM().fit(X).causal_order_.shape
    (2,)
    """

    def __init__(self, max_width=DEFAULT_MAX_WIDTH, tie_tol=TIE_TOL):
        self.max_width = max_width
        self.tie_tol = tie_tol

    def fit(self, X, y=None):
        """Estimate the causal order and the function of every column."""
        if isinstance(X, FrequencyTable):
            source = X
            n_features = X.m
        else:
            if hasattr(X, "columns"):
                self.feature_names_in_ = np.asarray(X.columns, dtype=object)
            Xb = check_binary_matrix(X)
            n_features = Xb.shape[1]
            source = Dataset(labels=tuple(range(n_features)), rows=Xb)
        self.n_features_in_ = n_features
        self.result_ = discover(source, max_width=self.max_width, tie_tol=self.tie_tol)
        self.causal_order_ = np.asarray(self.result_.order)
        self.adjacency_matrix_ = adjacency_from_estimate(self.result_, n_features)
        self.truth_tables_ = [self.result_.truth_table(j) for j in range(n_features)]
        self.mi_scores_ = np.array([self.result_.step_for(j).mi_score for j in range(n_features)])
        return self

    def predict(self, X):
        """Noise-free value ``f_j`` of every column given the rest of the row.

        Selections never seen during ``fit`` predict 0.
        """
        check_is_fitted(self, "result_")
        X = self._check_X(X)
        out = np.zeros_like(X)
        for j, tt in enumerate(self.truth_tables_):
            f = tt.lookup(X[:, list(tt.conditioning)])
            out[:, j] = np.where(f == VOID, 0, f)
        return out

    def transform(self, X):
        """Estimated external noise ``e_j = x_j XOR f_j``."""
        X = self._check_X(X)
        return X ^ self.predict(X)

    def _check_X(self, X):
        Xb = check_binary_matrix(X)
        if Xb.shape[1] != self.n_features_in_:
            raise ValueError(
                "X has %d features, but BExSAM was fitted with %d" % (Xb.shape[1], self.n_features_in_)
            )
        return Xb
