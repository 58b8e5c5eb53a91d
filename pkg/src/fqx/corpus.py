"""Corpus runners: exhaustive or seeded-random scans with ordered parallel merge."""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .errors import BudgetExceeded, FqxError
from .gf import FieldDesc, make_field
from .hyperell import min_odd_degree
from .polyring import Poly, set_global_seed, t_is_squarefree, t_polys_of_degree
from .qforms import DiagForm, is_isotropic, local_isotropy, refine_places, slot_verdict
from .sqref import SqRefRefutation, certify, verify_certificate

KINDS = ("sqref", "lgp4", "hyperell")
DEFAULT_ITEM_BUDGET = 200_000


@dataclass
class RunConfig:
    field: FieldDesc
    seed: int = 0
    kornblum_cap: int | None = None
    witness_cap: int = 6
    vector_cap: int = 6
    jobs: int = 1
    output: str = "json"
    samples: int = 500
    budget: int = DEFAULT_ITEM_BUDGET


@dataclass
class CorpusReport:
    command: str
    field: str
    parameters: dict
    items: list[dict]
    counters: dict
    wall_time: float = field(default=0.0, compare=False)

    def to_json(self) -> dict:
        # wall time is left out so identical runs serialize identically
        return {
            "schema": 1,
            "command": self.command,
            "field": self.field,
            "parameters": self.parameters,
            "counters": self.counters,
            "items": self.items,
        }


def _field(fkey: tuple[int, int]) -> FieldDesc:
    return make_field(*fkey)


def _sqref_item(args) -> dict:
    fkey, coeffs = args
    F = _field(fkey)
    f = Poly._raw(F, coeffs)
    try:
        res = certify(f)
    except FqxError as exc:
        return {"f": str(f), "status": "error", "error": f"{type(exc).__name__}: {exc}"}
    if isinstance(res, SqRefRefutation):
        return {"f": str(f), "status": "refuted", "alpha": str(res.alpha)}
    if not verify_certificate(res):
        return {"f": str(f), "status": "error", "error": "certificate failed re-verification"}
    return {
        "f": str(f),
        "status": "certified",
        "classes": [{"alpha": str(e.alpha), "witness_g": str(e.witness)} for e in res.entries],
    }


def _lgp4_item(args) -> dict:
    fkey, entries = args
    F = _field(fkey)
    phi = DiagForm.from_values([Poly._raw(F, c) for c in entries])
    local = is_isotropic(phi)
    slot = slot_verdict(phi)
    item = {
        "form": str(phi),
        "local": local.isotropic,
        "slot": slot.isotropic,
        "partner": None if slot.partner is None else str(slot.partner),
    }
    if local.isotropic != slot.isotropic:
        item["status"] = "error"
        item["error"] = "local and slot verdicts differ"
        return item
    item["status"] = "certified"
    if not local.isotropic:
        f, g, h = slot.extra["f"], slot.extra["g"], slot.extra["h"]
        shape = DiagForm.from_values([f, -g, -h, g * h])
        failing = [str(p) for p in refine_places(f, g, h) if not local_isotropy(shape, p)]
        item["failing_places"] = failing
        if not failing:
            item["status"] = "error"
            item["error"] = "anisotropic form with no local obstruction"
    return item


def _hyperell_item(args) -> dict:
    fkey, coeffs = args
    F = _field(fkey)
    f = Poly._raw(F, coeffs)
    r = min_odd_degree(f)
    status = "certified" if r.degree is not None else "error"
    out = {"f": str(f), "status": status, "degree": r.degree, "cap": r.cap, "complete": r.complete}
    if r.degree is None:
        out["error"] = "no odd-degree point up to the cap"
    return out


_WORKERS = {"sqref": _sqref_item, "lgp4": _lgp4_item, "hyperell": _hyperell_item}


def _random_sqfree(F: FieldDesc, max_deg: int, rng: random.Random) -> tuple:
    while True:
        d = rng.randint(0, max_deg)
        c = tuple(rng.randrange(F.q) for _ in range(d)) + (rng.randrange(1, F.q),)
        if t_is_squarefree(F, c):
            return c


def corpus_items(kind: str, degree: int, config: RunConfig) -> list:
    F = config.field
    fkey = (F.p, F.k)
    if kind in ("sqref", "hyperell"):
        total = (F.q - 1) * F.q ** degree
        if total > config.budget:
            raise BudgetExceeded(f"{total} polynomials of degree {degree} exceed the budget {config.budget}")
        polys = [c for c in t_polys_of_degree(F, degree) if t_is_squarefree(F, c)]
        if kind == "hyperell":
            polys = [c for c in polys if len(c) > 1]
        return [(fkey, c) for c in polys]
    if kind == "lgp4":
        rng = random.Random(f"lgp4|{config.seed}|{F!r}|{degree}")
        return [(fkey, tuple(_random_sqfree(F, degree, rng) for _ in range(4)))
                for _ in range(config.samples)]
    raise ValueError(f"unknown corpus kind {kind!r}")


def _init_worker(seed: int) -> None:
    set_global_seed(seed)


def corpus_scan(kind: str, degree: int, config: RunConfig) -> CorpusReport:
    worker = _WORKERS.get(kind)
    if worker is None:
        raise ValueError(f"unknown corpus kind {kind!r}")
    set_global_seed(config.seed)
    items = corpus_items(kind, degree, config)
    start = time.perf_counter()
    if config.jobs > 1 and len(items) > 1:
        chunk = max(1, len(items) // (config.jobs * 8))
        with ProcessPoolExecutor(config.jobs, initializer=_init_worker, initargs=(config.seed,)) as pool:
            results = list(pool.map(worker, items, chunksize=chunk))
    else:
        results = [worker(it) for it in items]
    counters = {"certified": 0, "refuted": 0, "errors": 0}
    for r in results:
        key = {"certified": "certified", "refuted": "refuted"}.get(r["status"], "errors")
        counters[key] += 1
    params = {"kind": kind, "degree": degree, "seed": config.seed}
    if kind == "lgp4":
        params["samples"] = config.samples
    return CorpusReport(
        command="corpus" if kind != "lgp4" else "lgp-scan",
        field=repr(config.field),
        parameters=params,
        items=results,
        counters=counters,
        wall_time=time.perf_counter() - start,
    )


__all__ = ["KINDS", "CorpusReport", "RunConfig", "corpus_items", "corpus_scan"]
