"""Closed-form identity registry and the corpus runner.

Every identity is checked by building the graph it talks about and summing
ev-degrees directly; the closed form is evaluated from invariant bundles of
the factors. Comparisons are exact integer equality.

Identities T4 and T8i carry two closed forms: the headline formula
(``stated``) and the one obtained by adding up the block sums of the
construction (``derived``). A result passes on ``derived`` when it exists.
"""
from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .fsum import f_sum
from .generators import FamilySpec, XorShift64Star, generate
from .graph import Graph, to_graph6
from .indices import ClassicInvariants, classic_invariants, mev
from .products import cartesian, composition, corona, join, tensor
from .transforms import edge_semitotal, line_graph, subdivision, total_graph, vertex_semitotal

UNARY_THEOREMS = ("T1i", "T1ii", "T2i", "T2ii")
BINARY_THEOREMS = ("T3", "T4", "T5", "T6", "T7", "T8i", "T8ii", "T9i", "T9ii")
UNARY_LEMMAS = ("L1", "L2i", "L2ii")
BINARY_LEMMAS = tuple(f"L3{c}" for c in "abcdefghi")
PROPERTIES = ("P_sum_evdeg", "P_mev_eq_hm1")
IDENTITY_IDS = UNARY_THEOREMS + BINARY_THEOREMS + UNARY_LEMMAS + BINARY_LEMMAS + PROPERTIES
_ORDER = {k: i for i, k in enumerate(IDENTITY_IDS)}

SUITES = {
    "all": IDENTITY_IDS,
    "theorems": UNARY_THEOREMS + BINARY_THEOREMS,
    "unary": UNARY_THEOREMS,
    "binary": BINARY_THEOREMS,
    "lemmas": UNARY_LEMMAS + BINARY_LEMMAS,
    "properties": PROPERTIES,
}


@dataclass
class IdentityResult:
    id: str
    inputs: tuple[str, ...]
    applicable: bool
    direct: int
    stated: int
    reason: str | None = None
    derived: int | None = None

    @property
    def stated_match(self) -> bool:
        return self.direct == self.stated

    @property
    def derived_match(self) -> bool | None:
        if self.derived is None:
            return None
        return self.direct == self.derived

    @property
    def passed(self) -> bool:
        if self.derived is not None:
            return self.direct == self.derived
        return self.direct == self.stated

    def to_dict(self) -> dict:
        d: dict = {"id": self.id, "inputs": list(self.inputs), "applicable": self.applicable}
        if self.reason is not None:
            d["reason"] = self.reason
        d["direct"] = self.direct
        d["stated"] = self.stated
        if self.derived is not None:
            d["derived"] = self.derived
        d["stated_match"] = self.stated_match
        if self.derived is not None:
            d["derived_match"] = self.derived_match
        return d


@dataclass(frozen=True)
class Profile:
    """Invariants of a graph and of its line graph, as the closed forms need them."""

    inv: ClassicInvariants
    Mev: int
    L: Graph
    Linv: ClassicInvariants
    LMev: int

    def __getattr__(self, name: str):
        # n, m, M1, ... read straight through to the classic bundle
        if name.startswith("_"):
            raise AttributeError(name)
        return getattr(self.inv, name)


@lru_cache(maxsize=4096)
def profile(G: Graph) -> Profile:
    L = line_graph(G)
    return Profile(inv=classic_invariants(G), Mev=mev(G), L=L, Linv=classic_invariants(L), LMev=mev(L))


def describe(G: Graph) -> str:
    return to_graph6(G)


def _labels(graphs: Sequence[Graph], inputs: Sequence[str] | None) -> tuple[str, ...]:
    if inputs is not None:
        return tuple(inputs)
    return tuple(describe(G) for G in graphs)


def _triangle_hyp(g: Profile) -> tuple[bool, str | None]:
    if g.eta == 0:
        return True, None
    return False, f"G is not triangle-free (eta(G)={g.eta})"


# -- unary theorems ---------------------------------------------------------

def eval_T1(G: Graph, inputs: Sequence[str] | None = None) -> tuple[IdentityResult, IdentityResult]:
    g = profile(G)
    labels = _labels([G], inputs)
    t1i = IdentityResult(
        "T1i", labels, True,
        direct=mev(subdivision(G)),
        stated=g.F + 4 * g.M1 + 8 * g.m,
    )
    L = g.Linv
    t1ii = IdentityResult(
        "T1ii", labels, True,
        direct=mev(edge_semitotal(G)),
        stated=g.LMev + 8 * L.M1 + 33 * L.m + 18 * g.m - 18 * L.eta,
    )
    return t1i, t1ii


def eval_T2(G: Graph, inputs: Sequence[str] | None = None) -> tuple[IdentityResult, IdentityResult]:
    g = profile(G)
    labels = _labels([G], inputs)
    ok, why = _triangle_hyp(g)
    L = g.Linv
    t2i = IdentityResult(
        "T2i", labels, ok, reason=why,
        direct=mev(vertex_semitotal(G)),
        stated=4 * g.HM1 + 4 * g.F + 3 * g.m,
    )
    t2ii = IdentityResult(
        "T2ii", labels, ok, reason=why,
        direct=mev(total_graph(G)),
        stated=(4 * g.Mev + L.HM1 - 4 * g.M1 + 6 * L.M1 + 5 * g.F
                + 8 * g.M2 + 9 * L.m + g.m),
    )
    return t2i, t2ii


# -- binary theorems --------------------------------------------------------

def eval_T3(G: Graph, H: Graph, inputs: Sequence[str] | None = None) -> IdentityResult:
    g, h = profile(G), profile(H)
    stated = (g.Mev + h.Mev + 2 * h.n * g.M1 + 2 * g.n * h.M1
              - 6 * h.n * g.eta - 6 * g.n * h.eta
              + h.n**2 * g.m + g.n**2 * h.m + (g.n + h.n) ** 2 * g.n * h.n)
    return IdentityResult("T3", _labels([G, H], inputs), True, direct=mev(join(G, H)), stated=stated)


def eval_T4(G: Graph, H: Graph, inputs: Sequence[str] | None = None) -> IdentityResult:
    g, h = profile(G), profile(H)
    base = h.n * g.Mev + g.n * h.Mev - 24 * g.m * h.eta - 24 * h.m * g.eta
    mixed = h.m * g.M1 + g.m * h.M1
    return IdentityResult(
        "T4", _labels([G, H], inputs), True,
        direct=mev(cartesian(G, H)),
        stated=base + 8 * mixed,
        derived=base + 12 * mixed,
    )


def eval_T5(G: Graph, H: Graph, inputs: Sequence[str] | None = None) -> IdentityResult:
    g, h = profile(G), profile(H)
    stated = (h.n**4 * g.Mev + g.n * h.Mev + h.n**2 * h.m * g.M1
              + 4 * h.n * g.m * h.M1 - 12 * h.n * g.m * h.eta)
    return IdentityResult("T5", _labels([G, H], inputs), True, direct=mev(composition(G, H)), stated=stated)


def eval_T6(G: Graph, H: Graph, inputs: Sequence[str] | None = None) -> IdentityResult:
    g, h = profile(G), profile(H)
    stated = (g.Mev + g.n * h.Mev + 5 * h.n * g.M1 + 2 * g.n * h.M1
              + 8 * h.n**2 * g.m + g.n * h.n * (h.n + 1) ** 2 + g.n * h.m
              + 4 * h.n * g.m - 6 * g.n * h.eta - 12 * h.n * g.eta)
    return IdentityResult("T6", _labels([G, H], inputs), True, direct=mev(corona(G, H)), stated=stated)


def eval_T7(G: Graph, H: Graph, inputs: Sequence[str] | None = None) -> IdentityResult:
    g, h = profile(G), profile(H)
    ok, why = _triangle_hyp(g)
    return IdentityResult(
        "T7", _labels([G, H], inputs), ok, reason=why,
        direct=mev(tensor(G, H)),
        stated=4 * g.M2 * h.M2 + g.F * h.F,
    )


def eval_T8(G: Graph, H: Graph, inputs: Sequence[str] | None = None) -> tuple[IdentityResult, IdentityResult]:
    g, h = profile(G), profile(H)
    labels = _labels([G, H], inputs)
    rest = (h.n * g.F + 8 * h.m * g.M1 + 4 * h.n * g.M1 + 10 * g.m * h.M1
            + 16 * g.m * h.m + 8 * h.n * g.m - 24 * h.eta * g.m)
    t8i = IdentityResult(
        "T8i", labels, True,
        direct=mev(f_sum(G, H, "Sd")),
        stated=g.n * g.Mev + rest,
        derived=g.n * h.Mev + rest,
    )
    L = g.Linv
    t8ii = IdentityResult(
        "T8ii", labels, True,
        direct=mev(f_sum(G, H, "ESTo")),
        stated=(h.n * g.LMev + g.n * h.Mev + 8 * h.n * L.M1 + 4 * h.m * g.M1
                + 10 * g.m * h.M1 + 33 * h.n * L.m + 16 * L.m * h.m + 24 * g.m * h.m
                + 18 * g.m * h.n - 24 * g.m * h.eta - 18 * h.n * L.eta),
    )
    return t8i, t8ii


def eval_T9(G: Graph, H: Graph, inputs: Sequence[str] | None = None) -> tuple[IdentityResult, IdentityResult]:
    g, h = profile(G), profile(H)
    labels = _labels([G, H], inputs)
    ok, why = _triangle_hyp(g)
    t9i = IdentityResult(
        "T9i", labels, ok, reason=why,
        direct=mev(f_sum(G, H, "VSTo")),
        stated=(4 * h.n * g.Mev + g.n * h.Mev + 40 * h.m * g.M1 + 22 * g.m * h.M1
                + 4 * h.n * g.F + 3 * h.n * g.m - 48 * g.m * h.eta),
    )
    L = g.Linv
    t9ii = IdentityResult(
        "T9ii", labels, ok, reason=why,
        direct=mev(f_sum(G, H, "To")),
        stated=(h.n * g.LMev + g.n * h.Mev + 4 * h.n * g.Mev + (40 * h.m - 6 * h.n) * g.M1
                + 28 * g.m * h.M1 + 8 * h.n * L.M1 + 4 * h.n * g.M2 + 3 * h.n * g.F
                - 48 * g.m * h.eta + 8 * g.m * h.m + 3 * g.m * h.n + 17 * L.m * h.n
                + 32 * L.m * h.m),
    )
    return t9i, t9ii


# -- lemmas -----------------------------------------------------------------

def _incident_ranks(G: Graph) -> list[list[int]]:
    inc: list[list[int]] = [[] for _ in range(G.n)]
    for r, (u, v) in enumerate(G.edges):
        inc[u].append(r)
        inc[v].append(r)
    return inc


def eval_unary_lemmas(G: Graph, inputs: Sequence[str] | None = None) -> list[IdentityResult]:
    g = profile(G)
    labels = _labels([G], inputs)
    nbr = [set(a) for a in G.adj]
    deg = [len(a) for a in G.adj]
    l1 = sum(len(nbr[u] & nbr[v]) for u, v in G.edges)
    l2i = sum(deg[y] ** 2 for x in range(G.n) for y in nbr[x])
    l2ii = sum(deg[x] * deg[y] for x in range(G.n) for y in nbr[x])
    return [
        IdentityResult("L1", labels, True, direct=l1, stated=3 * g.eta),
        IdentityResult("L2i", labels, True, direct=l2i, stated=g.F),
        IdentityResult("L2ii", labels, True, direct=l2ii, stated=2 * g.M2),
    ]


def eval_binary_lemmas(G: Graph, H: Graph, inputs: Sequence[str] | None = None) -> list[IdentityResult]:
    g, h = profile(G), profile(H)
    labels = _labels([G, H], inputs)
    ok, why = _triangle_hyp(g)
    d = G.degrees()
    dH = H.degrees()
    evd = G.ev_degrees()
    dL = g.L.degrees()
    inc = _incident_ranks(G)
    VH = range(H.n)
    VG = range(G.n)
    E = list(zip(G.edges, evd))

    left = {
        "a": sum((d[x] + d[x2]) ** 2 for _ in VH for (x, x2), _ev in E),
        "b": sum((ev + 2 * dH[y] - 1) ** 2 for y in VH for _e, ev in E),
        "c": sum(2 * (d[x] + d[x2]) * (ev + 2 * dH[y] - 1) for y in VH for (x, x2), ev in E),
        "d": sum(d[x] ** 2 for _ in VH for x in VG for _r in inc[x]),
        "e": sum(dL[r] ** 2 for _ in VH for x in VG for r in inc[x]),
        "f": sum(2 * d[x] * dL[r] for _ in VH for x in VG for r in inc[x]),
        "g": sum((2 * dH[y] + 1) ** 2 for y in VH for x in VG for _r in inc[x]),
        "h": sum(2 * (2 * dH[y] + 1) * d[x] for y in VH for x in VG for _r in inc[x]),
        "i": sum(2 * (2 * dH[y] + 1) * dL[r] for y in VH for x in VG for r in inc[x]),
    }
    L = g.Linv
    right = {
        "a": h.n * g.HM1,
        "b": h.n * g.Mev + 2 * g.M1 * (4 * h.m - h.n) + g.m * (4 * h.M1 + h.n - 8 * h.m),
        "c": 2 * h.n * g.HM1 + 2 * g.M1 * (4 * h.m - h.n),
        "d": h.n * g.F,
        "e": 2 * h.n * L.M1,
        "f": 2 * h.n * (g.F - 2 * g.M1 + 2 * g.M2),
        "g": 2 * g.m * (4 * h.M1 + 8 * h.m + h.n),
        "h": 2 * g.M1 * (4 * h.m + h.n),
        "i": 8 * L.m * (4 * h.m + h.n),
    }
    return [
        IdentityResult(f"L3{k}", labels, ok, reason=why, direct=left[k], stated=right[k])
        for k in "abcdefghi"
    ]


def eval_lemmas(G: Graph, H: Graph, inputs: Sequence[str] | None = None) -> list[IdentityResult]:
    """All lemma identities: unary ones on ``G``, the pair summations on ``(G, H)``."""
    unary_inputs = None if inputs is None else tuple(inputs)[:1]
    return eval_unary_lemmas(G, unary_inputs) + eval_binary_lemmas(G, H, inputs)


def eval_properties(G: Graph, inputs: Sequence[str] | None = None) -> list[IdentityResult]:
    g = profile(G)
    labels = _labels([G], inputs)
    ok, why = _triangle_hyp(g)
    return [
        IdentityResult("P_sum_evdeg", labels, True, direct=sum(G.ev_degrees()), stated=g.M1 - 3 * g.eta),
        IdentityResult("P_mev_eq_hm1", labels, ok, reason=why, direct=g.Mev, stated=g.HM1),
    ]


# -- corpora ----------------------------------------------------------------

@dataclass(frozen=True)
class CorpusSpec:
    """What to run the identities on.

    ``builtin`` is the fixed small family set with every ordered pair.
    ``random`` draws connected G(n, p) graphs: ``samples`` singles with
    ``2 <= n <= n_max`` and ``pairs`` pairs with ``1 <= n <= pair_n_max``.
    ``families`` runs an explicit list, pairing every ordered pair.
    """

    kind: str = "builtin"
    n_max: int = 9
    p: float = 0.4
    samples: int = 50
    pair_n_max: int = 6
    pairs: int | None = None
    families: tuple[FamilySpec, ...] = ()

    def to_dict(self) -> dict:
        if self.kind == "builtin":
            return {"kind": "builtin"}
        if self.kind == "families":
            return {"kind": "families", "families": [f.describe() for f in self.families]}
        return {
            "kind": "random", "n_max": self.n_max, "p": self.p, "samples": self.samples,
            "pair_n_max": self.pair_n_max, "pairs": self.n_pairs,
        }

    @property
    def n_pairs(self) -> int:
        return self.samples if self.pairs is None else self.pairs


def builtin_families() -> list[FamilySpec]:
    fams = [FamilySpec("path", (n,), label=f"P{n}") for n in range(2, 7)]
    fams += [FamilySpec("cycle", (n,), label=f"C{n}") for n in range(3, 7)]
    fams += [FamilySpec("complete", (n,), label=f"K{n}") for n in range(1, 5)]
    fams += [FamilySpec("star", (k,), label=f"K1,{k}") for k in range(1, 5)]
    return fams


Labeled = tuple[str, Graph]


def _random_connected(rng: XorShift64Star, lo: int, hi: int, p: float, count: int) -> list[Labeled]:
    out: list[Labeled] = []
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 1000 * max(count, 1):
            raise RuntimeError(f"could not draw {count} connected G(n<={hi}, p={p}) graphs")
        spec = FamilySpec("random_gnp", (rng.randint(lo, hi),), p=p, seed=rng.next_u64())
        G = generate(spec)
        if G.is_connected():
            out.append((spec.describe(), G))
    return out


def build_corpus(spec: CorpusSpec, seed: int) -> tuple[list[Labeled], list[tuple[Labeled, Labeled]]]:
    """Return the single graphs and the ordered pairs for ``spec``."""
    if spec.kind in ("builtin", "families"):
        fams = builtin_families() if spec.kind == "builtin" else list(spec.families)
        try:
            graphs = [(f.describe(), generate(f)) for f in fams]
        except ValueError as exc:
            raise ValueError(f"corpus generation failed: {exc}") from exc
        return graphs, [(a, b) for a in graphs for b in graphs]
    if spec.kind == "random":
        if spec.n_max < 2 or spec.pair_n_max < 1:
            raise ValueError("random corpus needs n_max >= 2 and pair_n_max >= 1")
        if not 0.0 < spec.p <= 1.0:
            raise ValueError(f"random corpus needs p in (0, 1], got {spec.p}")
        rng = XorShift64Star(seed)
        graphs = _random_connected(rng, 2, spec.n_max, spec.p, spec.samples)
        members = _random_connected(rng, 1, spec.pair_n_max, spec.p, 2 * spec.n_pairs)
        pairs = [(members[2 * i], members[2 * i + 1]) for i in range(spec.n_pairs)]
        return graphs, pairs
    raise ValueError(f"unknown corpus kind {spec.kind!r}")


# -- runner -----------------------------------------------------------------

@dataclass
class Report:
    suite: str
    seed: int
    corpus: list[dict]
    results: list[IdentityResult] = field(default_factory=list)

    def summary(self) -> dict[str, dict[str, int]]:
        ids = SUITES[self.suite]
        out: dict[str, dict[str, int]] = {}
        for i in ids:
            out[i] = {"pass": 0, "fail": 0, "skip": 0}
            if i in ("T4", "T8i"):
                out[i]["stated_mismatch"] = 0
        for r in self.results:
            s = out[r.id]
            if not r.applicable:
                s["skip"] += 1
                continue
            s["pass" if r.passed else "fail"] += 1
            if r.derived is not None and not r.stated_match:
                s["stated_mismatch"] += 1
        return out

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.results if r.applicable)

    def failures(self) -> list[IdentityResult]:
        return [r for r in self.results if r.applicable and not r.passed]

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "corpus": self.corpus,
            "results": [r.to_dict() for r in self.results],
            "summary": self.summary(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_csv(self) -> str:
        cols = ["id", "inputs", "applicable", "reason", "direct", "stated", "derived",
                "stated_match", "derived_match"]
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for r in self.results:
            d = r.to_dict()
            d["inputs"] = ";".join(d["inputs"])
            w.writerow(["" if d.get(c) is None else d[c] for c in cols])
        return buf.getvalue()


def _unary_task(args: tuple[str, Graph, frozenset]) -> list[IdentityResult]:
    label, G, want = args
    out: list[IdentityResult] = []
    inputs = (label,)
    if want & {"T1i", "T1ii"}:
        out.extend(eval_T1(G, inputs))
    if want & {"T2i", "T2ii"}:
        out.extend(eval_T2(G, inputs))
    if want & set(UNARY_LEMMAS):
        out.extend(eval_unary_lemmas(G, inputs))
    if want & set(PROPERTIES):
        out.extend(eval_properties(G, inputs))
    return [r for r in out if r.id in want]


_BINARY_EVALS: tuple[tuple[tuple[str, ...], Callable], ...] = (
    (("T3",), eval_T3),
    (("T4",), eval_T4),
    (("T5",), eval_T5),
    (("T6",), eval_T6),
    (("T7",), eval_T7),
    (("T8i", "T8ii"), eval_T8),
    (("T9i", "T9ii"), eval_T9),
    (BINARY_LEMMAS, eval_binary_lemmas),
)


def _binary_task(args: tuple[str, Graph, str, Graph, frozenset]) -> list[IdentityResult]:
    lg, G, lh, H, want = args
    out: list[IdentityResult] = []
    for ids, fn in _BINARY_EVALS:
        if want.intersection(ids):
            res = fn(G, H, (lg, lh))
            out.extend([res] if isinstance(res, IdentityResult) else res)
    return [r for r in out if r.id in want]


def _workers(workers: int | None) -> int:
    if workers is not None:
        if workers < 1:
            raise ValueError(f"workers must be >= 1, got {workers}")
        return workers
    env = os.environ.get("EVDEG_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise ValueError(f"EVDEG_THREADS must be an integer, got {env!r}") from None
    return 1


def _map(fn, items: list, workers: int) -> Iterable[list[IdentityResult]]:
    if workers <= 1 or len(items) < 2:
        return map(fn, items)
    with ProcessPoolExecutor(max_workers=workers) as ex:
        # map() yields in submission order, which keeps reports deterministic
        return list(ex.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


def run_suite(
    corpus: Sequence[CorpusSpec],
    seed: int,
    suite: str = "all",
    workers: int | None = None,
) -> Report:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)}")
    want = frozenset(SUITES[suite])
    nw = _workers(workers)
    unary: list[tuple] = []
    binary: list[tuple] = []
    for spec in corpus:
        graphs, pairs = build_corpus(spec, seed)
        unary.extend((label, G, want) for label, G in graphs)
        if want & set(PROPERTIES):
            seen = {label for label, _ in graphs}
            for (la, A), (lb, B) in pairs:
                for label, X in ((la, A), (lb, B)):
                    if label not in seen:
                        seen.add(label)
                        unary.append((label, X, want & frozenset(PROPERTIES)))
        binary.extend((la, A, lb, B, want) for (la, A), (lb, B) in pairs)

    results: list[IdentityResult] = []
    for chunk in _map(_unary_task, unary, nw):
        results.extend(chunk)
    for chunk in _map(_binary_task, binary, nw):
        results.extend(chunk)
    results.sort(key=lambda r: _ORDER[r.id])
    return Report(suite=suite, seed=seed, corpus=[c.to_dict() for c in corpus], results=results)
