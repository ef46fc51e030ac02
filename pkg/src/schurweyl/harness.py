"""Verification suites, experiment configs, and report writers.

The suites are the deterministic half of the package's evidence: exhaustive
small-case checks of the combinatorial identities.  Experiments are the
statistical half: sweeps of the bound checkers over (n, k) grids driven by
a JSON config.  Reruns of an experiment with the same config are
byte-identical in the CSV output; the JSON sidecar additionally carries
wall-times and is exempt from that guarantee.

CSV columns, in fixed order: n, k, estimate, ci, bound, mode, samples,
seed, verdict.  Floats are written with repr (shortest round-trip form).
"""

from __future__ import annotations

import itertools
import json
import math
import sys
import time
from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import _kernels, bounds, greene, metrics, rsk, sampling, viennot
from .partitions import check_dist, prefix_sum

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 3


class ConfigError(ValueError):
    pass


def _log(msg: str) -> None:
    print(msg, file=sys.stderr)


# ---------------------------------------------------------------------------
# alpha specs

def resolve_alpha(spec) -> tuple[float, ...]:
    """Turn an alpha spec into a sorted probability vector.

    Accepted forms: a plain list of probabilities (already sorted), or a
    dict with kind 'explicit' | 'uniform' | 'zipf' | 'dirichlet'.
    """
    if isinstance(spec, (list, tuple)):
        return check_dist(spec)
    if not isinstance(spec, dict) or "kind" not in spec:
        raise ConfigError(f"bad alpha spec: {spec!r}")
    kind = spec["kind"]
    if kind == "explicit":
        return check_dist(spec["probs"])
    if kind == "uniform":
        d = int(spec["d"])
        if d < 1:
            raise ConfigError("uniform alpha needs d >= 1")
        return (1.0 / d,) * d
    if kind == "zipf":
        d = int(spec["d"])
        s = float(spec.get("s", 1.0))
        if d < 1:
            raise ConfigError("zipf alpha needs d >= 1")
        w = [i ** -s for i in range(1, d + 1)]
        z = sum(w)
        return tuple(x / z for x in w)
    if kind == "dirichlet":
        d = int(spec["d"])
        conc = float(spec.get("concentration", 1.0))
        seed = int(spec.get("seed", 0))
        rng = sampling.make_rng(seed)
        a = np.sort(rng.dirichlet([conc] * d))[::-1]
        return tuple(float(x) for x in a)
    raise ConfigError(f"unknown alpha kind {kind!r}")


@dataclass(frozen=True)
class ExperimentConfig:
    experiment: str
    alpha: tuple[float, ...] | None
    n_sweep: tuple[int, ...]
    k: int | None
    budget: int
    seed: int
    output: str | None
    mode: str
    beta: tuple[float, ...] | None = None
    raw: dict = field(default_factory=dict, compare=False)

    @classmethod
    def from_dict(cls, data: dict) -> "ExperimentConfig":
        try:
            experiment = data["experiment"]
            if experiment not in EXPERIMENTS:
                raise ConfigError(f"unknown experiment {experiment!r}")
            alpha = None
            if "alpha" in data and data["alpha"] is not None:
                alpha = resolve_alpha(data["alpha"])
            elif experiment != "lis-plancherel":
                raise ConfigError(f"experiment {experiment!r} needs an alpha spec")
            beta = resolve_alpha(data["beta"]) if data.get("beta") is not None else None
            # an empty sweep is a legal (empty) grid; table prints headers only
            n_sweep = tuple(int(n) for n in data["n_sweep"])
            if any(n < 1 for n in n_sweep):
                raise ConfigError("n_sweep entries must be positive integers")
            k = data.get("k")
            k = None if k is None else int(k)
            budget = int(data.get("budget", bounds.DEFAULT_BUDGET))
            if budget < 1:
                raise ConfigError("budget must be >= 1")
            mode = data.get("mode", "auto")
            if mode not in ("auto", "exact", "mc"):
                raise ConfigError(f"unknown mode {mode!r}")
            return cls(experiment, alpha, n_sweep, k, budget,
                       int(data.get("seed", 0)), data.get("output"), mode, beta, dict(data))
        except KeyError as exc:
            raise ConfigError(f"missing config key: {exc}") from None
        except (TypeError, ValueError) as exc:
            if isinstance(exc, ConfigError):
                raise
            raise ConfigError(str(exc)) from None


def load_config(path: str) -> ExperimentConfig:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ConfigError("config must be a JSON object")
    return ExperimentConfig.from_dict(data)


# ---------------------------------------------------------------------------
# experiments

def _ks_for(cfg: ExperimentConfig, per_k: bool) -> list[int | None]:
    if not per_k:
        return [None]
    if cfg.k is not None:
        return [cfg.k]
    assert cfg.alpha is not None
    return list(range(1, len(cfg.alpha) + 1))


def _make_rate(metric_id: str, per_k: bool):
    def run(cfg: ExperimentConfig, n: int, k: int | None, stream: int) -> bounds.BoundCheck:
        return bounds.distance_rate_check(
            metric_id, cfg.alpha, n, k=k, budget=cfg.budget, seed=cfg.seed,
            stream=stream, mode=cfg.mode)
    return per_k, run


def _run_excess(cfg, n, k, stream):
    return bounds.excess_estimate(cfg.alpha, n=n, k=k, budget=cfg.budget,
                                  seed=cfg.seed, stream=stream, mode=cfg.mode)


def _run_prefix_dev(cfg, n, k, stream):
    return bounds.prefix_deviation_check(cfg.alpha, k, n, budget=cfg.budget,
                                         seed=cfg.seed, stream=stream, mode=cfg.mode)


def _run_prefix_trend(cfg, n, k, stream):
    return bounds.prefix_deviation_trend(cfg.alpha, k, n, budget=cfg.budget,
                                         seed=cfg.seed, stream=stream, mode=cfg.mode)


def _run_row_mean(cfg, n, k, stream):
    return bounds.row_mean_check(cfg.alpha, k, n, budget=cfg.budget, seed=cfg.seed,
                                 stream=stream, mode=cfg.mode, variant="basic")


def _run_row_mean_sharp(cfg, n, k, stream):
    return bounds.row_mean_check(cfg.alpha, k, n, budget=cfg.budget, seed=cfg.seed,
                                 stream=stream, mode=cfg.mode, variant="sharp")


def _run_variance(cfg, n, k, stream):
    return bounds.variance_check(cfg.alpha, k, n, budget=cfg.budget, seed=cfg.seed,
                                 stream=stream, mode=cfg.mode)


def _run_mean_squared(cfg, n, k, stream):
    return bounds.mean_squared_check(cfg.alpha, k, n, budget=cfg.budget, seed=cfg.seed,
                                     stream=stream, mode=cfg.mode)


def _run_entropy(cfg, n, k, stream):
    return bounds.entropy_bias_check(cfg.alpha, n, budget=cfg.budget, seed=cfg.seed,
                                     stream=stream, mode=cfg.mode)


def _run_coupling(cfg, n, k, stream):
    if cfg.beta is None:
        raise ConfigError("coupling-prefix-order needs a beta spec")
    return bounds.coupling_consequence_check(cfg.alpha, cfg.beta, k, n,
                                             budget=cfg.budget, seed=cfg.seed,
                                             stream=stream, mode=cfg.mode)


def _run_lis(cfg, n, k, stream):
    return bounds.lis_plancherel_check(n, budget=cfg.budget, seed=cfg.seed, stream=stream)


#: experiment id -> (per-k?, runner(cfg, n, k, stream) -> BoundCheck)
EXPERIMENTS: dict[str, tuple[bool, Callable]] = {
    "excess-itw": (True, _run_excess),
    "prefix-deviation": (True, _run_prefix_dev),
    "prefix-deviation-trend": (True, _run_prefix_trend),
    "row-mean": (True, _run_row_mean),
    "row-mean-sharp": (True, _run_row_mean_sharp),
    "row-variance": (True, _run_variance),
    "row-mean-squared": (True, _run_mean_squared),
    "entropy-bias": (False, _run_entropy),
    "coupling-prefix-order": (True, _run_coupling),
    "lis-plancherel": (False, _run_lis),
}
for _mid in bounds.RATE_METRICS:
    EXPERIMENTS[f"rate-{_mid}"] = _make_rate(_mid, _mid.endswith("-trunc") or _mid.endswith("-trunc-sharp"))


@dataclass
class ExperimentRow:
    n: int
    k: int | None
    check: bounds.BoundCheck
    stream: int
    wall_time: float


@dataclass
class ExperimentReport:
    config: ExperimentConfig
    rows: list[ExperimentRow]

    def verdict_counts(self) -> dict[str, int]:
        counts = {"pass": 0, "fail": 0, "inconclusive": 0}
        for row in self.rows:
            counts[row.check.verdict] += 1
        return counts

    def exit_code(self) -> int:
        counts = self.verdict_counts()
        if counts["fail"]:
            return EXIT_FAIL
        if counts["inconclusive"]:
            return EXIT_INCONCLUSIVE
        return EXIT_PASS


def _point_list(cfg: ExperimentConfig) -> list[tuple[int, int | None, int]]:
    per_k, _ = EXPERIMENTS[cfg.experiment]
    points = []
    stream = 0
    for n in cfg.n_sweep:
        for k in _ks_for(cfg, per_k):
            points.append((n, k, stream))
            stream += 1
    return points


def _run_point(args: tuple[ExperimentConfig, int, int | None, int]) -> tuple[bounds.BoundCheck, float]:
    cfg, n, k, stream = args
    _, runner = EXPERIMENTS[cfg.experiment]
    t0 = time.perf_counter()
    check = runner(cfg, n, k, stream)
    return check, time.perf_counter() - t0


def run_experiment(cfg: ExperimentConfig, jobs: int = 1) -> ExperimentReport:
    points = _point_list(cfg)
    args = [(cfg, n, k, stream) for n, k, stream in points]
    if jobs > 1 and len(points) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_point, args))
    else:
        results = []
        for a in args:
            results.append(_run_point(a))
            _log(f"point n={a[1]} k={a[2]} done ({results[-1][0].verdict})")
    rows = [ExperimentRow(n, k, check, stream, wt)
            for (n, k, stream), (check, wt) in zip(points, results)]
    return ExperimentReport(cfg, rows)


def _fmt(x: float) -> str:
    return repr(float(x))


CSV_COLUMNS = ("n", "k", "estimate", "ci", "bound", "mode", "samples", "seed", "verdict")


def report_csv(report: ExperimentReport) -> str:
    lines = [",".join(CSV_COLUMNS)]
    for row in report.rows:
        c = row.check
        lines.append(",".join([
            str(row.n),
            "" if row.k is None else str(row.k),
            _fmt(c.estimate),
            _fmt(c.ci_radius),
            _fmt(c.bound),
            c.mode,
            str(c.samples),
            str(report.config.seed),
            c.verdict,
        ]))
    return "\n".join(lines) + "\n"


def report_json(report: ExperimentReport) -> str:
    cfg = report.config
    payload = {
        "config": cfg.raw,
        "alpha": None if cfg.alpha is None else list(cfg.alpha),
        "beta": None if cfg.beta is None else list(cfg.beta),
        "rows": [
            {
                "n": row.n,
                "k": row.k,
                "check_id": row.check.check_id,
                "estimate": row.check.estimate,
                "ci": row.check.ci_radius,
                "bound": row.check.bound,
                "lower": row.check.lower,
                "direction": row.check.direction,
                "mode": row.check.mode,
                "samples": row.check.samples,
                "seed": cfg.seed,
                "stream": row.stream,
                "verdict": row.check.verdict,
                "wall_time_s": round(row.wall_time, 6),
            }
            for row in report.rows
        ],
        "verdicts": report.verdict_counts(),
    }
    return json.dumps(payload, indent=2, allow_nan=True) + "\n"


def write_report(report: ExperimentReport, base: str) -> tuple[str, str]:
    if base.endswith(".csv"):
        base = base[:-4]
    csv_path, json_path = base + ".csv", base + ".json"
    with open(csv_path, "w") as fh:
        fh.write(report_csv(report))
    with open(json_path, "w") as fh:
        fh.write(report_json(report))
    return csv_path, json_path


def render_table(report: ExperimentReport) -> str:
    """Aligned text table of an experiment report."""
    header = ("n", "k", "estimate", "ci", "bound", "mode", "samples", "verdict")
    body = []
    for row in report.rows:
        c = row.check
        body.append((
            str(row.n),
            "" if row.k is None else str(row.k),
            f"{c.estimate:.6g}",
            f"{c.ci_radius:.3g}",
            f"{c.bound:.6g}",
            c.mode,
            str(c.samples),
            c.verdict,
        ))
    widths = [max(len(header[i]), *(len(b[i]) for b in body)) if body else len(header[i])
              for i in range(len(header))]
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    for b in body:
        lines.append("  ".join(v.rjust(w) for v, w in zip(b, widths)))
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# verification suites

@dataclass
class SuiteResult:
    suite: str
    checked: int
    failures: int
    counterexample: str | None = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def summary(self) -> str:
        line = f"suite={self.suite} checked={self.checked} failures={self.failures} " \
               f"{'PASS' if self.passed else 'FAIL'}"
        if self.counterexample:
            line += f"\ncounterexample: {self.counterexample}"
        return line


def _all_words(max_n: int, max_d: int):
    for n in range(0, max_n + 1):
        yield from itertools.product(range(1, max_d + 1), repeat=n)


def suite_schensted(max_n: int = 8, max_d: int = 3, trials: int = 10**4, seed: int = 0) -> SuiteResult:
    """First row of the shape equals the longest weakly increasing subsequence."""
    checked = 0
    for w in _all_words(max_n, max_d):
        checked += 1
        sh = rsk.sh_rsk(w)
        first = sh[0] if sh else 0
        if first != greene.lis(w):
            return SuiteResult("schensted", checked, 1, f"w={w}")
    if trials:
        rng = sampling.make_rng(seed, stream=901)
        per_d = {2: 0, 3: 0, 4: 0, 8: 0, 16: 0}
        batch = max(1, trials // len(per_d))
        for d in per_d:
            n_max = 500
            lengths = rng.integers(1, n_max + 1, size=batch).astype(np.int32)
            letters = rng.integers(1, d + 1, size=(batch, n_max), dtype=np.int32)
            shapes = np.zeros((batch, d), np.int32)
            _kernels.word_shapes(letters, lengths, d, shapes)
            lis_out = np.zeros(batch, np.int32)
            _kernels.word_lis(letters, lengths, lis_out)
            checked += batch
            if not np.array_equal(shapes[:, 0], lis_out):
                i = int(np.nonzero(shapes[:, 0] != lis_out)[0][0])
                w = tuple(int(x) for x in letters[i, : lengths[i]])
                return SuiteResult("schensted", checked, 1, f"w={w}")
    return SuiteResult("schensted", checked, 0)


def suite_greene(max_n: int = 8, max_d: int = 3, trials: int = 0, seed: int = 0) -> SuiteResult:
    """Prefix sums of the shape equal the exhaustive Greene oracle."""
    checked = 0
    for w in _all_words(max_n, max_d):
        for k in range(1, max_d + 1):
            checked += 1
            if not greene.check_greene(w, k):
                return SuiteResult("greene", checked, 1, f"w={w} k={k}")
    return SuiteResult("greene", checked, 0)


def suite_lipschitz(max_n: int = 8, max_d: int = 3, trials: int = 0, seed: int = 0) -> SuiteResult:
    """Changing one letter moves each prefix sum by <= 1 and each row by <= 2."""
    checked = 0
    for w in _all_words(max_n, max_d):
        if not w:
            continue
        sh = rsk.sh_rsk(w)
        d_rows = max_d + 1
        pre = [prefix_sum(sh, min(k, len(sh))) for k in range(d_rows + 1)]
        for i in range(len(w)):
            for c in range(1, max_d + 1):
                if c == w[i]:
                    continue
                checked += 1
                w2 = w[:i] + (c,) + w[i + 1 :]
                sh2 = rsk.sh_rsk(w2)
                pre2 = [prefix_sum(sh2, min(k, len(sh2))) for k in range(d_rows + 1)]
                if any(abs(pre[k] - pre2[k]) > 1 for k in range(d_rows + 1)):
                    return SuiteResult("lipschitz", checked, 1, f"w={w} i={i} c={c} (prefix)")
                rows = max(len(sh), len(sh2))
                for k in range(rows):
                    a = sh[k] if k < len(sh) else 0
                    b = sh2[k] if k < len(sh2) else 0
                    if abs(a - b) > 2:
                        return SuiteResult("lipschitz", checked, 1, f"w={w} i={i} c={c} (row)")
    return SuiteResult("lipschitz", checked, 0)


def suite_lower_row(max_n: int = 8, max_d: int = 0, trials: int = 10**4, seed: int = 0,
                    ks: Sequence[int] = (1, 2, 3), rand_n: int = 60) -> SuiteResult:
    """Bump letters in word order majorize themselves in bump order."""
    checked = 0
    for n in range(1, max_n + 1):
        for p in itertools.permutations(range(1, n + 1)):
            for k in ks:
                checked += 1
                if not greene.check_lower_row_majorization(p, k):
                    return SuiteResult("lower-row-majorization", checked, 1, f"w={p} k={k}")
    rng = sampling.make_rng(seed, stream=902)
    for _ in range(trials):
        n = int(rng.integers(1, rand_n + 1))
        d = int(rng.integers(2, 11))
        w = tuple(int(x) for x in rng.integers(1, d + 1, size=n))
        for k in ks:
            checked += 1
            if not greene.check_lower_row_majorization(w, k):
                return SuiteResult("lower-row-majorization", checked, 1, f"w={w} k={k}")
    return SuiteResult("lower-row-majorization", checked, 0)


def suite_restriction(max_n: int = 8, max_d: int = 3, trials: int = 0, seed: int = 0) -> SuiteResult:
    """Shape of the letters >= k weakly majorizes rows k.. of the shape."""
    checked = 0
    for w in _all_words(max_n, max_d):
        for k in range(1, max_d + 1):
            checked += 1
            if not greene.check_restriction_weak_majorization(w, k):
                return SuiteResult("restriction-majorization", checked, 1, f"w={w} k={k}")
    return SuiteResult("restriction-majorization", checked, 0)


def suite_viennot(max_n: int = 8, max_d: int = 0, trials: int = 10**4, seed: int = 0,
                  rand_n: int = 100) -> SuiteResult:
    """Shadow-line skeleton matches the first bump stream; iteration matches the shape."""
    checked = 0
    for n in range(0, max_n + 1):
        for p in itertools.permutations(range(1, n + 1)):
            checked += 1
            diagram = viennot.build_diagram(p)
            sh = rsk.sh_rsk(p)
            ok = (viennot.skeleton_word(diagram) == rsk.bump_stream(p, 1)
                  and len(diagram.lines) == (sh[0] if sh else 0)
                  and len(diagram.lines) == greene.lis(p)
                  and viennot.iterated_shape(p) == sh
                  and viennot.lines_are_disjoint(diagram))
            if not ok:
                return SuiteResult("viennot", checked, 1, f"w={p}")
    rng = sampling.make_rng(seed, stream=903)
    for _ in range(trials):
        n = int(rng.integers(1, rand_n + 1))
        p = tuple(int(x) for x in rng.permutation(n) + 1)
        checked += 1
        diagram = viennot.build_diagram(p)
        if viennot.skeleton_word(diagram) != rsk.bump_stream(p, 1) \
                or viennot.iterated_shape(p) != rsk.sh_rsk(p):
            return SuiteResult("viennot", checked, 1, f"w={p}")
    return SuiteResult("viennot", checked, 0)


MODMULT_GRID = {
    2: ((0.7, 0.3), (0.75, 0.25), (0.9, 0.1)),
    3: ((0.5, 0.3, 0.2), (0.55, 0.3, 0.15), (0.6, 0.25, 0.15)),
    4: ((0.4, 0.3, 0.2, 0.1), (0.45, 0.3, 0.15, 0.1), (0.5, 0.25, 0.15, 0.1)),
}


def suite_modmult(max_n: int = 6, max_d: int = 4, trials: int = 0, seed: int = 0,
                  tol: float = 1e-10) -> SuiteResult:
    """Signed-density expectations match their closed forms on a distinct-alpha grid."""
    checked = 0
    for d, alphas in MODMULT_GRID.items():
        if d > max_d:
            continue
        for a in alphas:
            for n in range(1, max_n + 1):
                total = sampling.modmult_expectation(lambda h: 1.0, a, n)
                checked += 1
                if abs(total - 1.0) > tol:
                    return SuiteResult("modmult-identity", checked, 1,
                                       f"alpha={a} n={n}: density mass {total}")
                for k in range(1, d + 1):
                    want_row = bounds.modmult_row_mean_shift(a, k)
                    got_row = sampling.modmult_expectation(lambda h: float(h[k - 1]), a, n) - a[k - 1] * n
                    checked += 1
                    if abs(got_row - want_row) > tol:
                        return SuiteResult("modmult-identity", checked, 1,
                                           f"alpha={a} n={n} k={k}: row shift {got_row} vs {want_row}")
                    want_pre = bounds.itw(a, k)
                    got_pre = sampling.modmult_expectation(
                        lambda h: float(sum(h[:k])), a, n) - prefix_sum(a, k) * n
                    checked += 1
                    if abs(got_pre - want_pre) > tol:
                        return SuiteResult("modmult-identity", checked, 1,
                                           f"alpha={a} n={n} k={k}: prefix {got_pre} vs {want_pre}")
    return SuiteResult("modmult-identity", checked, 0)


EXCESS_GRID = {
    2: ((0.75, 0.25), (0.6, 0.4), (0.9, 0.1)),
    3: ((0.5, 0.3, 0.2), (0.6, 0.3, 0.1), (0.7, 0.2, 0.1)),
}


def suite_excess_monotone(max_n: int = 8, max_d: int = 3, trials: int = 0, seed: int = 0,
                          tol: float = 1e-10) -> SuiteResult:
    """Exact prefix excess is nonnegative, nondecreasing in n, and at most itw."""
    checked = 0
    for d, alphas in EXCESS_GRID.items():
        if d > max_d:
            continue
        for a in alphas:
            for k in range(1, d + 1):
                cap = bounds.itw(a, k)
                prev = 0.0
                for n in range(1, max_n + 1):
                    checked += 1
                    exc = bounds.exact_excess(a, k, n)
                    if exc < prev - tol:
                        return SuiteResult("excess-monotone", checked, 1,
                                           f"alpha={a} k={k}: Exc({n})={exc} < Exc({n-1})={prev}")
                    if exc > cap + tol:
                        return SuiteResult("excess-monotone", checked, 1,
                                           f"alpha={a} k={k} n={n}: Exc={exc} > itw={cap}")
                    prev = exc
    return SuiteResult("excess-monotone", checked, 0)


def suite_distance_inequalities(max_n: int = 6, max_d: int = 3, trials: int = 10**5,
                                seed: int = 0, tol: float = 1e-12) -> SuiteResult:
    """Hellinger^2 <= chi^2, KL <= chi^2, the chi^2 identity, and TV-Lipschitz means."""
    checked = 0
    rng = sampling.make_rng(seed, stream=904)
    for _ in range(trials):
        d = int(rng.integers(1, 9))
        a = rng.dirichlet([1.0] * d)
        b = rng.dirichlet([1.0] * d)
        a_l, b_l = a.tolist(), b.tolist()
        h2 = metrics.hellinger_sq(a_l, b_l)
        x2 = metrics.chi_sq(a_l, b_l)
        dkl = metrics.kl(a_l, b_l)
        checked += 1
        if h2 > x2 + tol:
            return SuiteResult("distance-inequalities", checked, 1, f"H2>chi2 a={a_l} b={b_l}")
        if dkl > x2 + tol:
            return SuiteResult("distance-inequalities", checked, 1, f"KL>chi2 a={a_l} b={b_l}")
        alt = metrics.chi_sq_identity(a_l, b_l)
        if math.isfinite(x2) and abs(alt - x2) > 1e-9:
            return SuiteResult("distance-inequalities", checked, 1, f"identity a={a_l} b={b_l}")
        if abs(metrics.tv(a_l, b_l) - 0.5 * metrics.l1(a_l, b_l)) > tol:
            return SuiteResult("distance-inequalities", checked, 1, f"tv/l1 a={a_l} b={b_l}")
    # mean prefix sums move by at most the total variation of the letter laws
    pairs = [((0.7, 0.3), (0.6, 0.4)), ((0.9, 0.1), (0.75, 0.25)),
             ((0.5, 0.3, 0.2), (0.4, 0.35, 0.25)), ((0.6, 0.3, 0.1), (0.5, 0.3, 0.2))]
    for a, b in pairs:
        d = len(a)
        tv_ab = metrics.tv(a, b)
        for n in range(1, max_n + 1):
            for k in range(1, d + 1):
                checked += 1
                ea = sampling.exact_sw_expectation(lambda sh: float(sum(sh[:k])), a, n) / n
                eb = sampling.exact_sw_expectation(lambda sh: float(sum(sh[:k])), b, n) / n
                if abs(ea - eb) > tv_ab + tol:
                    return SuiteResult("distance-inequalities", checked, 1,
                                       f"TV-Lipschitz alpha={a} beta={b} n={n} k={k}")
    return SuiteResult("distance-inequalities", checked, 0)


def _sorted_positive_vectors(max_d: int = 6, total: int = 6):
    """Sorted positive rational vectors from integer compositions of a small grid."""
    for d in range(1, max_d + 1):
        for comp in itertools.combinations(range(1, total), d - 1):
            parts = []
            prev = 0
            for c in comp + (total,):
                parts.append(c - prev)
                prev = c
            yield tuple(sorted((p / total for p in parts), reverse=True))


def suite_rearrangement(max_n: int = 0, max_d: int = 6, trials: int = 10**4,
                        seed: int = 0, tol: float = 1e-12) -> SuiteResult:
    """Rearrangement and log-sum inequalities, exhaustive small grid plus random."""
    checked = 0
    for a in _sorted_positive_vectors(max_d):
        if not bounds.log_sum_bound(a, tol):
            return SuiteResult("rearrangement", checked, 1, f"log-sum alpha={a}")
        for b in set(itertools.permutations(a)):
            checked += 1
            if not bounds.check_rearrangement(a, b, tol):
                return SuiteResult("rearrangement", checked, 1, f"alpha={a} beta={b}")
    rng = sampling.make_rng(seed, stream=905)
    for _ in range(trials):
        d = int(rng.integers(2, 9))
        a = tuple(sorted((float(x) for x in rng.dirichlet([1.0] * d)), reverse=True))
        if min(a) <= 0:
            continue
        b = tuple(rng.permutation(np.array(a)).tolist())
        checked += 1
        if not bounds.check_rearrangement(a, b, tol):
            return SuiteResult("rearrangement", checked, 1, f"alpha={a} beta={b}")
        if not bounds.log_sum_bound(a, tol):
            return SuiteResult("rearrangement", checked, 1, f"log-sum alpha={a}")
        zeta = float(rng.uniform(a[-1], a[0]))
        if zeta < a[0] and sum(1 for x in a if x > zeta) < d:
            checked += 1
            if not bounds.corollary_rearrangement_check(a, b, zeta, tol):
                return SuiteResult("rearrangement", checked, 1,
                                   f"clipped alpha={a} beta={b} zeta={zeta}")
    return SuiteResult("rearrangement", checked, 0)


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "schensted": suite_schensted,
    "greene": suite_greene,
    "lipschitz": suite_lipschitz,
    "lower-row-majorization": suite_lower_row,
    "restriction-majorization": suite_restriction,
    "viennot": suite_viennot,
    "modmult-identity": suite_modmult,
    "excess-monotone": suite_excess_monotone,
    "distance-inequalities": suite_distance_inequalities,
    "rearrangement": suite_rearrangement,
}


def run_suite(suite_id: str, max_n: int | None = None, max_d: int | None = None,
              trials: int | None = None, seed: int = 0) -> SuiteResult:
    if suite_id not in SUITES:
        raise ConfigError(f"unknown suite {suite_id!r}")
    fn = SUITES[suite_id]
    kwargs: dict = {"seed": seed}
    if max_n is not None:
        kwargs["max_n"] = max_n
    if max_d is not None:
        kwargs["max_d"] = max_d
    if trials is not None:
        kwargs["trials"] = trials
    return fn(**kwargs)
