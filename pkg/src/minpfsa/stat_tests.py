"""Two-sample homogeneity tests on next-symbol count vectors and the
compatibility graph they induce.

Three tests are provided. All operate on the 2 x |A| contingency table of
the two count vectors, drop columns whose combined count is zero, and use
df = (kept columns) - 1.

- ``chi2_pvalue``: Pearson's chi-squared without continuity correction.
- ``ft_pvalue``: the Freeman-Tukey statistic 4 * sum (sqrt(O) - sqrt(E))^2,
  referred to the same chi-squared distribution. It penalises outcomes that
  one sample never exhibits much harder than Pearson does, which is what
  distinguishing an impossible continuation from a merely rare one needs
  on short sequences. This is the package default.
- ``ks_pvalue``: two-sample Kolmogorov-Smirnov over the ordered categories
  with the asymptotic Kolmogorov distribution.

Identical normalized count vectors always give p = 1.0.
"""

from dataclasses import dataclass

import numpy as np
from scipy.special import kolmogorov
from scipy.stats import chi2 as _chi2

from .errors import DegenerateSampleError
from .sequences import cond_dist, histories

TESTS = ("freeman-tukey", "chi2", "ks")


@dataclass(frozen=True)
class TestConfig:
    """Which two-sample test to use and the significance level.

    Two histories are compatible (can share a state) when the p-value of
    their comparison is strictly greater than alpha.
    """

    __test__ = False  # keep pytest from collecting this as a test class

    test: str = "freeman-tukey"
    alpha: float = 0.05

    def __post_init__(self):
        if self.test not in TESTS:
            raise ValueError("unknown test %r, expected one of %r" % (self.test, TESTS))
        if not 0.0 < self.alpha < 1.0:
            raise ValueError("alpha must be in (0, 1)")


def _clean_table(counts_a, counts_b):
    a = np.asarray(counts_a, dtype=float)
    b = np.asarray(counts_b, dtype=float)
    if a.shape != b.shape or a.ndim != 1:
        raise ValueError("count vectors must be 1-d and of equal length")
    if a.sum() == 0 or b.sum() == 0:
        raise DegenerateSampleError("a sample with zero total count has no distribution")
    keep = (a + b) > 0
    return a[keep], b[keep]


def _identical_proportions(a, b):
    return np.allclose(a / a.sum(), b / b.sum(), rtol=0.0, atol=1e-12)


def chi2_pvalue(counts_a, counts_b):
    """Pearson chi-squared two-sample homogeneity test, no continuity
    correction. Returns the upper-tail p-value."""
    a, b = _clean_table(counts_a, counts_b)
    if len(a) < 2 or _identical_proportions(a, b):
        return 1.0
    table = np.array([a, b])
    expected = np.outer(table.sum(axis=1), table.sum(axis=0)) / table.sum()
    terms = (table - expected) ** 2 / expected
    # pair the two rows per column before summing so swapping the samples
    # gives a bitwise-identical statistic
    stat = (terms[0] + terms[1]).sum()
    return float(_chi2.sf(stat, len(a) - 1))


def ft_pvalue(counts_a, counts_b):
    """Freeman-Tukey two-sample homogeneity test on the same table and
    degrees of freedom as ``chi2_pvalue``."""
    a, b = _clean_table(counts_a, counts_b)
    if len(a) < 2 or _identical_proportions(a, b):
        return 1.0
    table = np.array([a, b])
    expected = np.outer(table.sum(axis=1), table.sum(axis=0)) / table.sum()
    terms = 4.0 * (np.sqrt(table) - np.sqrt(expected)) ** 2
    stat = (terms[0] + terms[1]).sum()
    return float(_chi2.sf(stat, len(a) - 1))


def ks_pvalue(counts_a, counts_b):
    """Two-sample Kolmogorov-Smirnov test over the ordered categories.

    D is the maximum cumulative-proportion gap and the p-value comes from
    the asymptotic Kolmogorov distribution at sqrt(n_eff) * D with
    n_eff = n_a * n_b / (n_a + n_b). The asymptotic distribution ignores
    the discreteness of the categories, so for small gaps on few categories
    it runs high compared to resampling.
    """
    a, b = _clean_table(counts_a, counts_b)
    na, nb = a.sum(), b.sum()
    d = float(np.max(np.abs(np.cumsum(a) / na - np.cumsum(b) / nb)))
    n_eff = na * nb / (na + nb)
    return float(kolmogorov(np.sqrt(n_eff) * d))


_DISPATCH = {"chi2": chi2_pvalue, "freeman-tukey": ft_pvalue, "ks": ks_pvalue}


def pvalue(counts_a, counts_b, config):
    """Run the configured two-sample test."""
    return _DISPATCH[config.test](counts_a, counts_b)


@dataclass(frozen=True)
class CompatibilityGraph:
    """Pairwise compatibility of the length-L histories of a sequence.

    vertices is the ordered history list (first-appearance order), pvalues
    the symmetric matrix of pairwise test results with 1.0 on the diagonal,
    and mu the boolean adjacency: mu[i, l] is True when histories i and l
    may share a state, that is when pvalues[i, l] > alpha. The diagonal is
    forced True.
    """

    vertices: tuple
    pvalues: np.ndarray
    mu: np.ndarray
    config: TestConfig

    def index(self, history):
        return self.vertices.index(tuple(history))

    def edges(self):
        """Off-diagonal compatible pairs (i, l) with i < l."""
        n = len(self.vertices)
        return [(i, l) for i in range(n) for l in range(i + 1, n) if self.mu[i, l]]


def compatibility_graph(wc, config=None):
    """Build the compatibility graph of the length-L histories of wc."""
    cfg = config or TestConfig()
    verts = tuple(histories(wc))
    n = len(verts)
    ext = [wc.extension_counts(v) for v in verts]
    pvals = np.ones((n, n))
    for i in range(n):
        for l in range(i + 1, n):
            p = pvalue(ext[i], ext[l], cfg)
            pvals[i, l] = pvals[l, i] = p
    mu = pvals > cfg.alpha
    np.fill_diagonal(mu, True)
    return CompatibilityGraph(verts, pvals, mu, cfg)


def pairwise_pvalues(wc, config=None):
    """Mapping (history_i, history_l) -> p-value for all ordered pairs.

    Convenience view of the compatibility graph for reporting.
    """
    g = compatibility_graph(wc, config)
    out = {}
    n = len(g.vertices)
    for i in range(n):
        for l in range(n):
            if i != l:
                out[(g.vertices[i], g.vertices[l])] = float(g.pvalues[i, l])
    return out
