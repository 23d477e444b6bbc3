"""Fullness predicates, Dao numbers d1/d2/d3 with certificates, Ratliff-Rush
closures, s(m), reductions and reduction numbers, and the aggregated report.

Certificates
------------
certified      an exact computation (or an existential hit) proves the value;
probabilistic  a witness search failed T times; the value is the best bound;
cap_limited    a scan hit its cap; stable_window records trailing agreement.

Graded termination bounds eat their own dog food: the weak-fullness scan for
d3 stops at the regularity of the extended Rees module, and a disagreement
between scan and bound is a hard error (it would falsify the implementation).
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from itertools import combinations_with_replacement

from .errors import DepthHypothesisError, EngineInconsistency, InputError, ModeError, RetryExhausted
from .blowup import ideal_quotient_dim, rees_regularity, rees_ring_regularity
from .groebner import normal_form
from .linalg import echelon
from .localspace import TruncatedSpace
from .monomials import DEGREVLEX
from .polynomials import Polynomial
from .rings import (
    IdealHandle,
    PresentedRing,
    colon_gens,
    ideal_colon,
    ideal_colon_elem,
    ideal_combine,
    ideal_power,
    localized_equal,
    max_ideal,
)


@dataclass(frozen=True)
class Certificate:
    kind: str  # certified | probabilistic | cap_limited
    trials: int | None = None
    cap: int | None = None
    stable_window: int | None = None

    def to_json(self) -> dict:
        out = {"kind": self.kind}
        if self.trials is not None:
            out["trials"] = self.trials
        if self.cap is not None:
            out["cap"] = self.cap
        if self.stable_window is not None:
            out["stable_window"] = self.stable_window
        return out

    @property
    def is_certified(self) -> bool:
        return self.kind == "certified"


CERTIFIED = Certificate("certified")


@dataclass
class Verdict:
    value: str  # yes | no | probably_no | unknown
    witness: str | None = None
    certificate: Certificate = CERTIFIED

    def __post_init__(self):
        if self.value == "yes" and self.witness is None:
            self.witness = "(computation)"

    def to_json(self) -> dict:
        return {"value": self.value, "witness": self.witness, "certificate": self.certificate.to_json()}

    @property
    def is_yes(self) -> bool:
        return self.value == "yes"


@dataclass
class DaoNumber:
    value: int
    certificate: Certificate
    failing_ks: tuple = ()
    witnesses: dict = dc_field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "certificate": self.certificate.to_json(),
            "failing_ks": list(self.failing_ks),
            "witnesses": {str(k): v for k, v in sorted(self.witnesses.items())},
        }


@dataclass
class InvariantConfig:
    trials: int = 8
    cap: int = 12
    probe_window: int = 2
    rr_window: int = 2
    seed: int = 0

    def rng(self, salt: str = "") -> random.Random:
        return random.Random(f"{self.seed}:{salt}")

    def to_json(self) -> dict:
        return {
            "trials": self.trials,
            "cap": self.cap,
            "probe_window": self.probe_window,
            "rr_window": self.rr_window,
            "seed": self.seed,
        }


DEFAULT_CONFIG = InvariantConfig()


def _require_proper_nonzero(I: IdealHandle):
    if I.is_zero_ideal():
        raise InputError("the zero ideal is rejected for Dao invariants")
    if I.is_unit():
        raise InputError("the unit ideal is rejected for Dao invariants")


def _equal_handles(A: IdealHandle, B: IdealHandle) -> bool:
    if A.ring.is_graded:
        return A.gb == B.gb
    return localized_equal(A, B)


def _contained_in(A: IdealHandle, B: IdealHandle) -> bool:
    """A <= B, mode-aware."""
    if A.ring.is_graded:
        return B.contains_handle(A)
    return all(B.contains(g) or B.contains_locally(g) for g in A.gens)


# --------------------------------------------------------------------------- #
# fullness predicates
# --------------------------------------------------------------------------- #


def is_weakly_m_full(A: IdealHandle) -> Verdict:
    """Im : m = I, decided exactly."""
    if not A.is_proper():
        raise InputError("weak m-fullness needs a proper ideal")
    R = A.ring
    m = max_ideal(R)
    Am = ideal_combine("product", A, m)
    colon = ideal_colon(Am, m)
    ok = _equal_handles(colon, A)
    return Verdict("yes" if ok else "no", None, CERTIFIED)


def is_m_full(A: IdealHandle, trials: int = 8, rng: random.Random | None = None) -> Verdict:
    """Im : x = I for some linear form x outside m^2; the condition is
    existential, so a hit certifies yes; T misses report probably_no(T)."""
    if not A.is_proper():
        raise InputError("m-fullness needs a proper ideal")
    R = A.ring
    rng = rng or random.Random(0)
    m = max_ideal(R)
    Am = ideal_combine("product", A, m)
    for _ in range(max(1, trials)):
        x = R.form_outside_m2(rng)
        colon = ideal_colon_elem(Am, x)
        if _contained_in(colon, A):  # the reverse inclusion always holds
            return Verdict("yes", x.to_str(), CERTIFIED)
    return Verdict("probably_no", None, Certificate("probabilistic", trials=trials))


def is_full(A: IdealHandle, trials: int = 8, rng: random.Random | None = None) -> Verdict:
    """I : x = I : m for some linear form x outside m^2."""
    if not A.is_proper():
        raise InputError("fullness needs a proper ideal")
    R = A.ring
    rng = rng or random.Random(0)
    m = max_ideal(R)
    rhs = ideal_colon(A, m)
    for _ in range(max(1, trials)):
        x = R.form_outside_m2(rng)
        lhs = ideal_colon_elem(A, x)
        if _contained_in(lhs, rhs):  # rhs <= lhs always
            return Verdict("yes", x.to_str(), CERTIFIED)
    return Verdict("probably_no", None, Certificate("probabilistic", trials=trials))


# --------------------------------------------------------------------------- #
# Dao module components
# --------------------------------------------------------------------------- #


def _product_chain(R: PresentedRing, I: IdealHandle, upto: int):
    """[I, Im, Im^2, ...] up to index upto."""
    m = max_ideal(R)
    out = [I]
    for _ in range(upto):
        out.append(ideal_combine("product", out[-1], m))
    return out

def dao_component_dim(R: PresentedRing, I: IdealHandle, k: int) -> int:
    """dim_K (Im^{k+1} : m)/(Im^k); in local mode only vanishing is decided
    (0 means the component vanishes, 1 that it does not)."""
    _require_proper_nonzero(I)
    m = max_ideal(R)
    chain = _product_chain(R, I, k + 1)
    P = ideal_colon(chain[k + 1], m)
    if R.is_graded:
        return ideal_quotient_dim(P, chain[k])
    return 0 if localized_equal(P, chain[k]) else 1


# --------------------------------------------------------------------------- #
# d3 / d1 / d2
# --------------------------------------------------------------------------- #


def _wmf_scan_graded(R: PresentedRing, I: IdealHandle, bound: int):
    """Failing ks of the weak-m-fullness scan for k in [0, bound)."""
    m = max_ideal(R)
    chain = _product_chain(R, I, bound + 1)
    failing = []
    for k in range(bound):
        colon = ideal_colon(chain[k + 1], m)
        if not _equal_handles(colon, chain[k]):
            failing.append(k)
    return failing, chain


def dao_d3(R: PresentedRing, I: IdealHandle, config: InvariantConfig = DEFAULT_CONFIG) -> DaoNumber:
    """Least t with Im^k weakly m-full for all k >= t.

    Graded: scan k < reg of the extended Rees module (certified bound), and
    verify the bound degree itself as a self-check.  Local: certified through
    the reduction identity max(r, s(m)-1) when I is a certified reduction;
    otherwise a capped scan.
    """
    R.require_depth_positive()
    _require_proper_nonzero(I)
    if R.is_graded:
        U = rees_regularity(R, I)
        failing, chain = _wmf_scan_graded(R, I, U)
        m = max_ideal(R)
        # dog food: the bound degree itself must pass
        top = ideal_colon(ideal_combine("product", chain[U], m), m)
        if not _equal_handles(top, chain[U]):
            raise EngineInconsistency(
                "weak-m-fullness failed at the regularity bound; this would falsify the termination theorem"
            )
        value = (max(failing) + 1) if failing else 0
        return DaoNumber(value, CERTIFIED, tuple(failing))
    # local mode
    red = is_reduction_of_m(R, I, config)
    if red.is_yes:
        r = red_number_from_verdict(red)
        s_val, s_cert, _w = s_of_m(R, config)
        value = max(r, s_val - 1)
        cert = CERTIFIED if s_cert.is_certified else Certificate(
            "cap_limited", cap=s_cert.cap, stable_window=s_cert.stable_window
        )
        failing = _local_scan_consistency(R, I, r, value)
        return DaoNumber(value, cert, tuple(failing))
    failing = []
    m = max_ideal(R)
    chain = _product_chain(R, I, config.cap)
    for k in range(config.cap):
        P = ideal_colon(chain[k + 1], m)
        if not localized_equal(P, chain[k]):
            failing.append(k)
    value = (max(failing) + 1) if failing else 0
    tail = config.cap - value
    return DaoNumber(
        value,
        Certificate("cap_limited", cap=config.cap, stable_window=tail),
        tuple(failing),
    )


def _local_scan_consistency(R: PresentedRing, I: IdealHandle, r: int, d3: int):
    """Verify, with exact truncated linear algebra, that the weak-fullness
    pattern around d3 matches the identity value; returns the failing ks."""
    failing = []
    checks = sorted({k for k in (d3 - 1, d3, d3 + 1) if k >= 0})
    for k in checks:
        ok = _wmf_local_truncated(R, I, k, r)
        if not ok:
            failing.append(k)
    bad_high = [k for k in failing if k >= d3]
    missing_low = d3 > 0 and (d3 - 1) not in failing
    if bad_high or missing_low:
        raise EngineInconsistency(
            f"local weak-fullness scan disagrees with the reduction identity at {failing} vs d3={d3}"
        )
    return failing


def _wmf_local_truncated(R: PresentedRing, I: IdealHandle, k: int, r: int) -> bool:
    """Weak m-fullness of Im^k for a certified reduction I with Im^r = m^{r+1},
    via exact subspace computations at truncation level k + r + 2."""
    L = k + r + 2
    S = R.ambient
    chain = _product_chain(R, I, k + 1)
    up = TruncatedSpace.from_ideal_gens(S, list(chain[k + 1].gens) + list(R.defining_gb.basis), L)
    colon = up.colon_by_max_ideal()
    down = TruncatedSpace.from_ideal_gens(S, list(chain[k].gens) + list(R.defining_gb.basis), L)
    return colon.equals(down)


def dao_d1(R: PresentedRing, I: IdealHandle, config: InvariantConfig = DEFAULT_CONFIG) -> DaoNumber:
    """Least t with Im^k m-full for all k >= t; reported from d3 (the two
    agree) and verified by witness probes on [d3, d3 + probe_window]."""
    d3 = dao_d3(R, I, config)
    rng = config.rng("d1")
    chain = _product_chain(R, I, d3.value + config.probe_window)
    witnesses = {}
    all_found = True
    for k in range(d3.value, d3.value + config.probe_window + 1):
        A = chain[k]
        if not A.is_proper():
            continue
        v = is_m_full(A, config.trials, rng)
        if v.is_yes:
            witnesses[k] = v.witness
        else:
            all_found = False
    cert = d3.certificate if all_found else Certificate("probabilistic", trials=config.trials)
    return DaoNumber(d3.value, cert, d3.failing_ks, witnesses)


def dao_d2(R: PresentedRing, I: IdealHandle, config: InvariantConfig = DEFAULT_CONFIG) -> DaoNumber:
    """Least t with Im^k full for all k >= t, scanned downward from d1.

    The value never exceeds d1 (the basic relation); when even the top probe
    finds no witness, d1 is reported with a probabilistic certificate."""
    d1 = dao_d1(R, I, config)
    rng = config.rng("d2")
    chain = _product_chain(R, I, d1.value)
    witnesses = {}
    t = 0
    missed = False
    for k in range(d1.value, -1, -1):
        A = chain[k]
        if not A.is_proper():
            t = k + 1
            break
        v = is_full(A, config.trials, rng)
        if v.is_yes:
            witnesses[k] = v.witness
        else:
            t = k + 1
            missed = True
            break
    t = min(t, d1.value)
    if t == 0 and not missed:
        cert = d1.certificate
    else:
        cert = Certificate("probabilistic", trials=config.trials)
    return DaoNumber(t, cert, (), witnesses)


# --------------------------------------------------------------------------- #
# Ratliff-Rush
# --------------------------------------------------------------------------- #


def contains_regular_element(A: IdealHandle) -> bool:
    """(0 : A) = 0 in R, mode-aware."""
    R = A.ring
    zero = R.zero_ideal()
    ann = ideal_colon(zero, A)
    return _equal_handles(ann, zero)


def ratliff_rush(A: IdealHandle, window: int = 2, cap: int = 12):
    """Closure by the increasing chain A^{j+1} : A^j, accepted after `window`
    consecutive equal terms; cap_limited unless a better route applies."""
    R = A.ring
    _require_proper_nonzero(A)
    if not contains_regular_element(A):
        raise InputError("ratliff_rush needs an ideal containing a regular element")
    prev = A
    stable = 0
    power = A  # A^j
    for j in range(1, cap + 1):
        nxt_power = ideal_combine("product", power, A)  # A^{j+1}
        cur = ideal_colon(nxt_power, power)
        if not _contained_in(prev, cur):
            raise EngineInconsistency("ratliff-rush chain failed to increase")
        if _equal_handles(cur, prev):
            stable += 1
            if stable >= window:
                return cur, Certificate("cap_limited", cap=j, stable_window=stable)
        else:
            stable = 0
        prev = cur
        power = nxt_power
    return prev, Certificate("cap_limited", cap=cap, stable_window=stable)


@dataclass
class PowersClosureTable:
    """widetilde(m^k) data: which powers differ from their closure, s(m), and
    a witness element of widetilde(m^k) \\ m^k for the top failing k."""

    s_value: int
    certificate: Certificate
    non_equal_ks: tuple
    witness: str | None
    graded_table: dict | None = None  # k -> IdealHandle of the closure

    def to_json(self) -> dict:
        return {
            "s": self.s_value,
            "certificate": self.certificate.to_json(),
            "non_equal_ks": list(self.non_equal_ks),
            "witness": self.witness,
        }


def rr_powers_of_m(R: PresentedRing, config: InvariantConfig = DEFAULT_CONFIG) -> PowersClosureTable:
    """Closures of all powers of m.

    Graded: descend from N = max(1, reg of the Rees ring of m), where the
    closure equals the power by the regularity bound on s(m); each
    widetilde(m^k) = widetilde(m^{k+1}) : m.  Certified.
    Local: descend inside truncations from increasing tops until the pattern
    is stable for rr_window consecutive tops.
    """
    R.require_depth_positive()
    if R.is_graded:
        N = max(1, rees_ring_regularity(R))
        m = max_ideal(R)
        table = {N: ideal_power(m, N)}
        for k in range(N - 1, 0, -1):
            table[k] = ideal_colon(table[k + 1], m)
        non_equal = []
        witness = None
        for k in range(1, N + 1):
            mk = ideal_power(m, k)
            if table[k].gb != mk.gb:
                non_equal.append(k)
        if non_equal:
            top = max(non_equal)
            mk = ideal_power(m, top)
            for g in table[top].gb.basis:
                if not mk.contains(g):
                    witness = g.to_str()
                    break
        s_val = (max(non_equal) + 1) if non_equal else 1
        return PowersClosureTable(s_val, CERTIFIED, tuple(non_equal), witness, table)
    # local mode: stability of m^T : m^{T-k} over increasing tops
    S = R.ambient
    jbasis = list(R.defining_gb.basis)
    prev_pattern = None
    stable = 0
    last = None
    for T in range(2, config.cap + 1):
        L = T + 1
        space = TruncatedSpace.from_ideal_gens(S, _power_gens(R, T) + jbasis, L)
        diffs = []
        witness = None
        cur = space
        for k in range(T - 1, 0, -1):
            cur = cur.colon_by_max_ideal()
            power_space = TruncatedSpace.from_ideal_gens(S, _power_gens(R, k) + jbasis, L)
            if not cur.equals(power_space):
                diffs.append(k)
                if witness is None or k == max(diffs):
                    for row in cur.lift_rows():
                        if power_space.reduce_row(dict(row.terms)):
                            witness = row.to_str()
                            break
        pattern = tuple(sorted(diffs))
        s_val = (max(pattern) + 1) if pattern else 1
        last = PowersClosureTable(
            s_val,
            Certificate("cap_limited", cap=T, stable_window=stable + 1),
            pattern,
            witness,
        )
        if pattern == prev_pattern:
            stable += 1
            if stable >= config.rr_window:
                last.certificate = Certificate("cap_limited", cap=T, stable_window=stable)
                return last
        else:
            stable = 0
        prev_pattern = pattern
    return last


def _power_gens(R: PresentedRing, k: int):
    S = R.ambient
    out = []
    for c in combinations_with_replacement(range(S.nvars), k):
        e = [0] * S.nvars
        for i in c:
            e[i] += 1
        out.append(S.monomial(tuple(e)))
    return out


def s_of_m(R: PresentedRing, config: InvariantConfig = DEFAULT_CONFIG):
    """(s(m), certificate, witness): least n with widetilde(m^i) = m^i for i >= n."""
    t = rr_powers_of_m(R, config)
    return t.s_value, t.certificate, t.witness


# --------------------------------------------------------------------------- #
# reductions
# --------------------------------------------------------------------------- #


@dataclass
class ReductionVerdict:
    verdict: Verdict
    r_value: int | None

    def to_json(self) -> dict:
        out = self.verdict.to_json()
        out["r"] = self.r_value
        return out

    @property
    def is_yes(self):
        return self.verdict.is_yes


def red_number_from_verdict(v) -> int:
    if isinstance(v, ReductionVerdict):
        if v.r_value is None:
            raise InputError("not a reduction")
        return v.r_value
    raise InputError("not a reduction verdict")


def is_reduction_of_m(R: PresentedRing, I: IdealHandle, config: InvariantConfig = DEFAULT_CONFIG) -> ReductionVerdict:
    """Scan Im^k = m^{k+1}; in graded mode the scan bound
    max(1, reg of the Rees ring) certifies a negative answer."""
    if I.is_unit() or any(not R.field.is_zero(g.constant_term()) for g in I.gens):
        raise InputError("I must sit inside the maximal ideal")
    m = max_ideal(R)
    if R.is_graded:
        B = max(1, rees_ring_regularity(R))
        chain = _product_chain(R, I, B)
        for k in range(B + 1):
            mk1 = ideal_power(m, k + 1)
            if chain[k].gb == mk1.gb:
                return ReductionVerdict(Verdict("yes", f"k={k}", CERTIFIED), k)
        return ReductionVerdict(Verdict("no", None, CERTIFIED), None)
    # local: Nakayama containment test inside a truncation, exact per level
    S = R.ambient
    jbasis = list(R.defining_gb.basis)
    chain = _product_chain(R, I, config.cap)
    for k in range(config.cap + 1):
        L = k + 2
        space = TruncatedSpace.from_ideal_gens(S, list(chain[k].gens) + jbasis, L)
        ok = all(space.contains_poly(g) for g in _power_gens(R, k + 1))
        if ok:
            return ReductionVerdict(Verdict("yes", f"k={k}", CERTIFIED), k)
    return ReductionVerdict(
        Verdict("unknown", None, Certificate("cap_limited", cap=config.cap)), None
    )


def reduction_number(R: PresentedRing, I: IdealHandle, config: InvariantConfig = DEFAULT_CONFIG) -> int:
    v = is_reduction_of_m(R, I, config)
    if not v.is_yes:
        raise InputError("reduction_number: I is not a (certified) reduction of m")
    return v.r_value


def sample_minimal_reduction(
    R: PresentedRing, rng: random.Random, config: InvariantConfig = DEFAULT_CONFIG, retries: int = 16
) -> IdealHandle:
    """dim(R) random linear forms, retried until they form a reduction of m;
    a reduction generated by dim(R) elements is minimal."""
    R.require_depth_positive()
    d = R.dimension()
    if d < 1:
        raise InputError("sampling needs dimension >= 1")
    jrows = [g.linear_coefficients() for g in R.defining_gb.basis]
    jrows = [r for r in jrows if any(not R.field.is_zero(c) for c in r)]
    base_rank = len(echelon([list(r) for r in jrows], R.field)) if jrows else 0
    for _ in range(retries):
        forms = [R.ambient.random_linear_form(rng) for _ in range(d)]
        stacked = [list(r) for r in jrows] + [f.linear_coefficients() for f in forms]
        if len(echelon(stacked, R.field)) != base_rank + d:
            continue  # not independent modulo m^2
        I = IdealHandle(R, forms)
        if is_reduction_of_m(R, I, config).is_yes:
            return I
    raise RetryExhausted("no reduction found; raise trials or switch the field")


# --------------------------------------------------------------------------- #
# the aggregated report
# --------------------------------------------------------------------------- #


@dataclass
class InvariantReport:
    ring_summary: dict
    ideal_summary: dict
    config: InvariantConfig
    d1: DaoNumber
    d2: DaoNumber
    d3: DaoNumber
    s_table: PowersClosureTable
    reduction: ReductionVerdict
    dao_components: list
    regularity: dict
    flags: dict
    checks: list

    def to_json_dict(self) -> dict:
        return {
            "schema": "daolab.report.v1",
            "ring": self.ring_summary,
            "ideal": self.ideal_summary,
            "config": self.config.to_json(),
            "invariants": {
                "d1": self.d1.to_json(),
                "d2": self.d2.to_json(),
                "d3": self.d3.to_json(),
                "s_of_m": self.s_table.to_json(),
                "reduction": self.reduction.to_json(),
                "dao_components": self.dao_components,
                "regularity": self.regularity,
            },
            "flags": self.flags,
            "checks": self.checks,
        }


def ring_summary(R: PresentedRing) -> dict:
    return {
        "field": repr(R.field),
        "variables": list(R.ambient.names),
        "relations": [g.to_str() for g in R.relations],
        "mode": R.mode,
    }


def invariant_report(R: PresentedRing, I: IdealHandle, config: InvariantConfig = DEFAULT_CONFIG) -> InvariantReport:
    """Every invariant of the pair (R, I), with certificates and the two
    internal consistency checks recorded (and enforced)."""
    R.require_depth_positive()
    _require_proper_nonzero(I)
    d3 = dao_d3(R, I, config)
    d1 = dao_d1(R, I, config)
    d2 = dao_d2(R, I, config)
    s_table = rr_powers_of_m(R, config)
    red = is_reduction_of_m(R, I, config)
    checks = []
    ok_rel = d2.value <= d1.value and d1.value == d3.value
    checks.append({"name": "d2 <= d1 = d3", "status": "pass" if ok_rel else "fail"})
    if not ok_rel:
        raise EngineInconsistency("basic Dao-number relation failed")
    if red.is_yes:
        ident = max(red.r_value, s_table.s_value - 1)
        ok_ident = ident == d3.value
        certified = red.verdict.certificate.is_certified and s_table.certificate.is_certified and d3.certificate.is_certified
        checks.append(
            {
                "name": "d3 = max(r, s-1)",
                "status": "pass" if ok_ident else "fail",
                "certified": certified,
                "lhs": d3.value,
                "rhs": ident,
            }
        )
        if not ok_ident and R.is_graded:
            raise EngineInconsistency("reduction identity failed in graded mode")
    dao_components = []
    if R.is_graded:
        for k in range(d3.value + 2):
            dim_k = dao_component_dim(R, I, k)
            dao_components.append({"k": k, "dim": dim_k})
        vanish_ok = all(
            (c["dim"] == 0) == (c["k"] >= d3.value or c["k"] not in d3.failing_ks)
            for c in dao_components
        )
        checks.append({"name": "component vanishing matches scan", "status": "pass" if vanish_ok else "fail"})
    regs = {}
    if R.is_graded:
        regs["rees_ring"] = rees_ring_regularity(R)
        regs["rees_module"] = rees_regularity(R, I)
        ok_main = d3.value <= regs["rees_module"]
        ok_mono = regs["rees_ring"] <= regs["rees_module"]
        checks.append({"name": "d3 <= reg", "status": "pass" if ok_main else "fail"})
        checks.append({"name": "reg ring <= reg module", "status": "pass" if ok_mono else "fail"})
        if not (ok_main and ok_mono):
            raise EngineInconsistency("regularity bounds failed in graded mode")
    dim, dim_cert = R.dimension_with_certificate()
    flags = {
        "depth_positive": True,
        "mode": R.mode,
        "field": repr(R.field),
        "dimension": dim,
        "dimension_certificate": dim_cert,
        "embedding_dimension": R.embedding_dimension(),
        "multiplicity": R.multiplicity(),
        "minimal_multiplicity": R.has_minimal_multiplicity(),
    }
    return InvariantReport(
        ring_summary(R),
        {"generators": [g.to_str() for g in I.gens]},
        config,
        d1,
        d2,
        d3,
        s_table,
        red,
        dao_components,
        regs,
        flags,
        checks,
    )
