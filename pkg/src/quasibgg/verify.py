"""Named verification suites and the aggregate runner."""

from __future__ import annotations

import itertools
import json
import os
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

from .bgg import build_bgg_complex, d_squared, euler_character, square_violations
from .charring import RationalChar, rc_equal, rc_residual
from .qsl2 import verify_cogeneration, verify_kernel_closure
from .report import Case, VerificationReport
from .reps_chars import (
    freudenthal_char,
    sl2_exact_sequence_case,
    sl2_filtration_cases,
    weyl_char,
    weyl_dimension,
)
from .root_data import ALL_LABELS, build_root_datum, parse_label
from .semiinf import (
    SemiinfCharParams,
    calibrate_rank1,
    chformula,
    chformula_general,
    expand,
    odd_t_only,
    per_cell_term,
    rank1_closed_form,
)
from .serialize import rational_to_json
from .weyl import GroupTooLarge, bruhat_leq, covers, generate_group, reduced_subword_products

GOLDEN_VERSION = "v1"


def golden_dir() -> Path:
    env = os.environ.get("QBGG_GOLDEN_DIR")
    if env:
        return Path(env)
    return Path(__file__).parent / "golden" / GOLDEN_VERSION


def golden_name(type_label: str, ell: int, weight: Sequence[int], truncation: int) -> str:
    w = "_".join(str(x) for x in weight)
    return f"oracle-rank1_{type_label}_l{ell}_w{w}_h{truncation}.json"


@dataclass
class VerifyConfig:
    types: list[str] | None = None  # None means each suite's own defaults
    ells: list[int] | None = None
    kmax: int = 4
    truncation: int = 10
    bless: bool = False


def _types(cfg: VerifyConfig, default: Sequence[str]) -> list[str]:
    return list(default) if cfg.types is None else list(cfg.types)


def _uses_a1(cfg: VerifyConfig) -> bool:
    return cfg.types is None or "A1" in cfg.types


def _ells(cfg: VerifyConfig, default: Sequence[int]) -> list[int]:
    return list(default) if cfg.ells is None else list(cfg.ells)


def _small_weights(rank: int, bound: int):
    return itertools.product(range(bound + 1), repeat=rank)


def _residual(a: RationalChar, b: RationalChar) -> dict:
    return {"residual": rational_to_json(rc_residual(a, b))}


# ------------------------------------------------------------ suites

def suite_sl2_exact_sequence(cfg: VerifyConfig, rep: VerificationReport) -> None:
    if not _uses_a1(cfg):
        return
    for ell in _ells(cfg, (3, 5, 7)):
        for mu in range(0, cfg.kmax * ell + 1):
            rep.cases.append(sl2_exact_sequence_case(ell, mu))


def suite_sl2_filtration(cfg: VerifyConfig, rep: VerificationReport) -> None:
    if not _uses_a1(cfg):
        return
    for ell in _ells(cfg, (3, 5, 7)):
        for k in range(0, cfg.kmax + 1):
            rep.extend(sl2_filtration_cases(ell, k))


def suite_qsl2(cfg: VerifyConfig, rep: VerificationReport) -> None:
    if not _uses_a1(cfg):
        return
    for mu in range(0, 11):
        rep.extend(verify_cogeneration(mu, mu + 9))
        rep.extend(verify_kernel_closure(mu, mu + 10, mu + 10))
        for ell in _ells(cfg, (3, 5, 7)):
            rep.extend(verify_cogeneration(mu, mu + 9, ell))
            rep.extend(verify_kernel_closure(mu, mu + 10, mu + 10, ell))


def suite_bgg_euler(cfg: VerifyConfig, rep: VerificationReport) -> None:
    for label in _types(cfg, ("A1", "A2", "A3", "B2", "G2")):
        datum = build_root_datum(label)
        for mu in _small_weights(datum.rank, 2):
            euler = euler_character(build_bgg_complex(datum, mu))
            wc = weyl_char(datum, mu)
            params = {"type": label, "mu": list(mu)}
            ok_w = rc_equal(euler, wc.rational, datum)
            rep.cases.append(Case("bgg.euler_equals_weyl", params, ok_w,
                                  None if ok_w else _residual(euler, wc.rational)))
            # Freudenthal builds the same character without any W-sum
            fr = RationalChar(freudenthal_char(datum, mu))
            ok_f = rc_equal(euler, fr, datum)
            rep.cases.append(Case("bgg.euler_equals_freudenthal", params, ok_f,
                                  None if ok_f else _residual(euler, fr)))


RANK_LE_3 = tuple(x for x in ALL_LABELS if parse_label(x)[1] <= 3)


def suite_bgg_signs(cfg: VerifyConfig, rep: VerificationReport) -> None:
    for label in _types(cfg, RANK_LE_3):
        datum = build_root_datum(label)
        cx = build_bgg_complex(datum, (0,) * datum.rank)
        nonzero = {k: M for k, M in d_squared(cx).items() if any(any(r) for r in M)}
        rep.cases.append(Case("bgg.d_squared_zero", {"type": label}, not nonzero,
                              {"degrees": sorted(nonzero)} if nonzero else None))
        bad = square_violations(cx)
        rep.cases.append(Case("bgg.square_anticommutes", {"type": label}, not bad,
                              {"squares": bad[:10]} if bad else None))


def _semiinf_configs(cfg: VerifyConfig):
    for label in _types(cfg, ("A1", "A2", "B2")):
        datum = build_root_datum(label)
        for ell in _ells(cfg, (3, 5)):
            for lam in _small_weights(datum.rank, 1):
                yield label, SemiinfCharParams(datum, ell, lam)


def suite_semiinf_filtration(cfg: VerifyConfig, rep: VerificationReport) -> None:
    from .charring import rc_sum

    for label, p in _semiinf_configs(cfg):
        total = rc_sum([per_cell_term(p, w) for w in generate_group(p.datum)])
        ref = chformula(p)
        ok = rc_equal(total, ref, p.datum)
        rep.cases.append(Case("semiinf.cell_sum", {"type": label, "ell": p.ell, "lambda": list(p.lam)},
                              ok, None if ok else _residual(total, ref)))


def suite_semiinf_rank1(cfg: VerifyConfig, rep: VerificationReport) -> None:
    if not _uses_a1(cfg):
        return
    A1 = build_root_datum("A1")
    for ell in _ells(cfg, (3, 5)):
        p = SemiinfCharParams(A1, ell, (0,), truncation_height=cfg.truncation)
        exp = expand(p, chformula(p))
        bad = []
        for n in range(cfg.truncation + 1):
            got = exp.t_polynomial((-2 * n * ell,))
            want = rank1_closed_form(n)
            if got != want:
                bad.append({"n": n, "got": {str(k): v for k, v in sorted(got.items())},
                            "want": {str(k): v for k, v in sorted(want.items())}})
        params = {"ell": ell, "truncation": cfg.truncation}
        rep.cases.append(Case("semiinf.rank1_closed_form", params, not bad,
                              {"mismatches": bad} if bad else None))
        odd = odd_t_only(exp)
        rep.cases.append(Case("semiinf.odd_degrees", params, odd,
                              None if odd else {"even": sorted({t for _, t, _ in exp.items() if t % 2 == 0})}))


def suite_semiinf_general(cfg: VerifyConfig, rep: VerificationReport) -> None:
    for label, p in _semiinf_configs(cfg):
        a, b = chformula_general(p), chformula(p)
        ok = rc_equal(a, b, p.datum)
        rep.cases.append(Case("semiinf.general_at_identity", {"type": label, "ell": p.ell, "lambda": list(p.lam)},
                              ok, None if ok else _residual(a, b)))


def suite_oracle_calibration(cfg: VerifyConfig, rep: VerificationReport) -> None:
    if not _uses_a1(cfg):
        return
    ell, h = 3, cfg.truncation
    first = calibrate_rank1(ell, h)
    second = calibrate_rank1(ell, h)
    params = {"ell": ell, "truncation": h}
    stable = json.dumps(first, sort_keys=True) == json.dumps(second, sort_keys=True)
    rep.cases.append(Case("oracle.stable", params, stable, None if stable else {"note": "runs differ"}))
    conv = first["calibration"]["converged"]
    rep.cases.append(Case("oracle.calibration_converged", params, conv,
                          None if conv else {"calibration": first["calibration"]}))
    path = golden_dir() / golden_name("A1", ell, (0,), h)
    if cfg.bless:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(first, sort_keys=True, indent=2) + "\n")
    if not path.exists():
        rep.cases.append(Case("oracle.golden_match", dict(params, path=path.name), False,
                              {"note": "golden file missing; rerun with --bless"}))
        return
    try:
        stored = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        stored = {"unreadable": str(exc)}
    ok = stored == json.loads(json.dumps(first))
    witness = None
    if not ok:
        keys = sorted(set(stored) | set(first))
        witness = {"differing_keys": [k for k in keys if stored.get(k) != first.get(k)],
                   "computed": first}
    rep.cases.append(Case("oracle.golden_match", dict(params, path=path.name), ok, witness))


def _closed_form_roots(label: str) -> int:
    series, n = parse_label(label)
    return {"A": n * (n + 1) // 2, "B": n * n, "C": n * n, "D": n * (n - 1),
            "E": {6: 36, 7: 63, 8: 120}.get(n, -1), "F": 24, "G": 6}[series]


def suite_combinatorial(cfg: VerifyConfig, rep: VerificationReport) -> None:
    types = _types(cfg, RANK_LE_3)
    for label in ALL_LABELS if cfg.types is None else types:
        datum = build_root_datum(label)
        want = _closed_form_roots(label)
        got = datum.num_positive_roots
        rep.cases.append(Case("roots.count_closed_form", {"type": label}, got == want,
                              None if got == want else {"got": got, "want": want}))
    for label in types:
        datum = build_root_datum(label)
        W = generate_group(datum)
        up = {w.rho_image: {u.rho_image for u in covers(w)} for w in W}
        # transitive closure of covers, built top-down through lengths
        above: dict = {}
        for w in sorted(W, key=lambda x: -x.length):
            acc = {w.rho_image}
            for u in up[w.rho_image]:
                acc |= above[u]
            above[w.rho_image] = acc
        bad = []
        for w1 in W:
            for w2 in W:
                if bruhat_leq(w1, w2) != (w2.rho_image in above[w1.rho_image]):
                    bad.append([list(w1.word), list(w2.word)])
        rep.cases.append(Case("weyl.bruhat_subword_vs_covers", {"type": label}, not bad,
                              {"pairs": bad[:10]} if bad else None))
        bad = [list(w.word) for w in W
               if reduced_subword_products(w) != {u for u in above if w.rho_image in above[u]}]
        rep.cases.append(Case("weyl.bruhat_interval_bruteforce", {"type": label}, not bad,
                              {"elements": bad[:10]} if bad else None))
        bad = []
        for mu in _small_weights(datum.rank, 2):
            dim = weyl_char(datum, mu).dimension
            ref = weyl_dimension(datum, mu)
            if dim != ref:
                bad.append({"mu": list(mu), "char": dim, "formula": ref})
        rep.cases.append(Case("reps.weyl_dimension", {"type": label, "bound": 2}, not bad,
                              {"mismatches": bad} if bad else None))


SUITES: dict[str, Callable[[VerifyConfig, VerificationReport], None]] = {
    "sl2-exact-sequence": suite_sl2_exact_sequence,
    "sl2-filtration": suite_sl2_filtration,
    "qsl2-divided-powers": suite_qsl2,
    "bgg-euler": suite_bgg_euler,
    "bgg-signs": suite_bgg_signs,
    "semiinf-filtration": suite_semiinf_filtration,
    "semiinf-rank1": suite_semiinf_rank1,
    "semiinf-general": suite_semiinf_general,
    "oracle-calibration": suite_oracle_calibration,
    "combinatorial-oracles": suite_combinatorial,
}

# acceptance criterion number -> suite name
CRITERIA = dict(enumerate(SUITES, start=1))


def run_suite(name: str, cfg: VerifyConfig | None = None) -> VerificationReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    cfg = cfg or VerifyConfig()
    rep = VerificationReport(name)
    t0 = time.perf_counter()
    try:
        SUITES[name](cfg, rep)
    except GroupTooLarge as exc:
        rep.skipped.append(f"{name}: {exc}")
    rep.timing_ms = (time.perf_counter() - t0) * 1000
    return rep


def run_verify_all(cfg: VerifyConfig | None = None) -> VerificationReport:
    """Every suite, merged in suite-name order."""
    cfg = cfg or VerifyConfig()
    out = VerificationReport("all")
    if cfg.types is not None and not cfg.types:
        out.timing_ms = 0.0
        return out
    total = 0.0
    for name in sorted(SUITES):
        rep = run_suite(name, cfg)
        out.extend(rep.cases)
        out.skipped.extend(rep.skipped)
        total += rep.timing_ms or 0.0
    out.timing_ms = total
    return out
