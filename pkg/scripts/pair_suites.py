"""Check the poset-pair claims on every pair of posets up to simultaneous relabelling.

Covers reflexivity and normality, equal Ehrhart polynomials, the volume
formula and the Groebner families.

    python scripts/pair_suites.py --max-d 4 --groebner-max-d 3
"""

from __future__ import annotations

import argparse
import json
import logging
import time
from dataclasses import asdict, dataclass, field

from gfpoly.constructions import omega_of_posets, six_polytopes
from gfpoly.ehrhart import ehrhart_polynomial, volume_omega_formula
from gfpoly.enumeration import poset_pairs
from gfpoly.posets import has_common_linear_extension
from gfpoly.reflexive import is_normal, is_reflexive
from gfpoly.toric import FAMILIES, generate_family, rings_isomorphism_check, verify_system

log = logging.getLogger("pair_suites")


@dataclass
class SuiteConfig:
    max_d: int = 4
    groebner_max_d: int = 3
    degree: int = 4


@dataclass
class SuiteTally:
    checked: int = 0
    failed: list = field(default_factory=list)
    seconds: float = 0.0

    def record(self, ok: bool, label) -> None:
        self.checked += 1
        if not ok:
            self.failed.append(label)


def run(cfg: SuiteConfig) -> dict[str, SuiteTally]:
    tallies = {k: SuiteTally() for k in ("reflexive_normal", "equi_ehrhart", "volume", "groebner", "hilbert_counts")}
    for d in range(1, cfg.max_d + 1):
        pairs = poset_pairs(d)
        log.info("d=%d: %d pairs", d, len(pairs))
        for P, Q in pairs:
            label = (d, P.covers(), Q.covers())
            common = has_common_linear_extension(P, Q)

            t = time.perf_counter()
            for kind in FAMILIES if common else ("oc", "cc"):
                W = omega_of_posets(P, Q, kind)
                tallies["reflexive_normal"].record(is_reflexive(W) and is_normal(W).verdict is True, (kind, label))
            tallies["reflexive_normal"].seconds += time.perf_counter() - t

            if common:
                t = time.perf_counter()
                polys = {ehrhart_polynomial(W).coeffs for W in six_polytopes(P, Q).values()}
                tallies["equi_ehrhart"].record(len(polys) == 1, label)
                tallies["equi_ehrhart"].seconds += time.perf_counter() - t
                t = time.perf_counter()
                lead = ehrhart_polynomial(omega_of_posets(P, Q, "oc")).leading
                tallies["volume"].record(volume_omega_formula(P, Q) == lead, label)
                tallies["volume"].seconds += time.perf_counter() - t

            if d <= cfg.groebner_max_d:
                t = time.perf_counter()
                for family in FAMILIES if common else ("oc", "cc"):
                    rep = verify_system(generate_family(family, P, Q), n_max=cfg.degree)
                    tallies["groebner"].record(rep.passed, (family, label))
                tallies["groebner"].seconds += time.perf_counter() - t
                t = time.perf_counter()
                rep = rings_isomorphism_check(P, Q, n_max=cfg.degree)
                tallies["hilbert_counts"].record(rep.passed, label)
                tallies["hilbert_counts"].seconds += time.perf_counter() - t
    return tallies


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-d", type=int, default=SuiteConfig.max_d)
    ap.add_argument("--groebner-max-d", type=int, default=SuiteConfig.groebner_max_d)
    ap.add_argument("--degree", type=int, default=SuiteConfig.degree)
    ap.add_argument("-v", "--verbose", action="store_true")
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    cfg = SuiteConfig(args.max_d, args.groebner_max_d, args.degree)
    tallies = run(cfg)
    summary = {k: {**asdict(v), "seconds": round(v.seconds, 2), "failed": [str(x) for x in v.failed[:10]]}
               for k, v in tallies.items()}
    print(json.dumps({"config": asdict(cfg), "suites": summary}, indent=2))
    raise SystemExit(1 if any(v.failed for v in tallies.values()) else 0)


if __name__ == "__main__":
    main()
