"""Catalog-driven verification by exhaustion of the normal ordering and
product identities, at caller-chosen degree bounds, with counterexample
reporting.

Operator-valued identities are checked extensionally: both sides are
applied to every Schur function s_gamma with |gamma| up to the declared
vector bound, and the images compared exactly.  Summation ranges are
derived from the vanishing of skew terms (s_{a/l} = 0 unless l is
contained in a), so every sum here is finite and exact, never truncated
by guesswork.
"""

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable

from . import coeffs
from . import operators as op
from . import partitions as pt
from . import symfunc as sf
from . import tableaux as tb
from .reporting import Failure, VerificationReport


@dataclass(frozen=True)
class Bounds:
    """Degree bounds for a suite run.

    max_ab bounds the operator index partitions (and small integer
    parameters like the Pieri k); max_g bounds test vectors and free shape
    parameters.
    """

    max_ab: int = 2
    max_g: int = 3


@dataclass(frozen=True)
class Entry:
    ident: str
    formula: str
    instances: Callable  # Bounds -> list of params dicts
    check: Callable  # params dict -> (checked count, [Failure])


def _ops_equal(params, exprs, vector_bound):
    """All expressions agree on every s_gamma with |gamma| <= bound."""
    checked = 0
    failures = []
    for gamma in pt.partitions_upto(vector_bound):
        g = sf.schur(gamma)
        base = exprs[0].apply(g)
        checked += 1
        for other in exprs[1:]:
            val = other.apply(g)
            if val != base:
                failures.append(Failure({**params, "gamma": gamma}, base, val))
                break
    return checked, failures


def _sym_equal(params, lhs, rhs):
    if lhs != rhs:
        return 1, [Failure(params, lhs, rhs)]
    return 1, []


def _pairs(bound):
    ps = pt.partitions_upto(bound)
    return [(a, b) for a in ps for b in ps]


def _ab_instances(bounds):
    return [
        {"alpha": a, "beta": b, "vector_bound": bounds.max_g}
        for a, b in _pairs(bounds.max_ab)
    ]


# ---------------------------------------------------------------------------
# the six normal ordering relations, skew-function form

def _rhs_du(alpha, beta):
    rhs = op.zero_op()
    for lam in pt.sub_partitions(alpha):
        if not pt.contains(lam, beta):
            continue
        rhs = rhs + op.U(sf.skew_schur(alpha, lam)) * op.D(sf.skew_schur(beta, lam))
    return rhs


def _chk_thm_main_1(prm):
    a, b = prm["alpha"], prm["beta"]
    lhs = op.D(sf.schur(b)) * op.U(sf.schur(a))
    return _ops_equal(prm, [lhs, _rhs_du(a, b)], prm["vector_bound"])


def _rhs_ud(alpha, beta):
    rhs = op.zero_op()
    for lam in pt.sub_partitions(alpha):
        if not pt.contains(pt.conjugate(lam), beta):
            continue
        sign = -1 if sum(lam) % 2 else 1
        rhs = rhs + sign * (
            op.D(sf.skew_schur(beta, pt.conjugate(lam)))
            * op.U(sf.skew_schur(alpha, lam))
        )
    return rhs


def _chk_thm_main_2(prm):
    a, b = prm["alpha"], prm["beta"]
    lhs = op.U(sf.schur(a)) * op.D(sf.schur(b))
    return _ops_equal(prm, [lhs, _rhs_ud(a, b)], prm["vector_bound"])


def _rhs_ku(alpha, beta):
    rhs = op.zero_op()
    for lam in pt.sub_partitions(beta):
        if sum(beta) - sum(lam) != sum(alpha):
            continue
        f = sf.kronecker(sf.skew_schur(beta, lam), sf.schur(alpha))
        rhs = rhs + op.U(f) * op.K(sf.schur(lam))
    return rhs


def _chk_thm_main_3(prm):
    a, b = prm["alpha"], prm["beta"]
    lhs = op.K(sf.schur(b)) * op.U(sf.schur(a))
    return _ops_equal(prm, [lhs, _rhs_ku(a, b)], prm["vector_bound"])


def _rhs_dk(alpha, beta):
    rhs = op.zero_op()
    for lam in pt.sub_partitions(beta):
        if sum(beta) - sum(lam) != sum(alpha):
            continue
        f = sf.kronecker(sf.skew_schur(beta, lam), sf.schur(alpha))
        rhs = rhs + op.K(sf.schur(lam)) * op.D(f)
    return rhs


def _chk_thm_main_4(prm):
    a, b = prm["alpha"], prm["beta"]
    lhs = op.D(sf.schur(a)) * op.K(sf.schur(b))
    return _ops_equal(prm, [lhs, _rhs_dk(a, b)], prm["vector_bound"])


def _kbu_terms(alpha, beta):
    """Pairs (nu, f) with f = (s_{beta/nu} * s_tau) s_{alpha/tau} summed
    over tau; used by both orders of the KB/U relation."""
    out = []
    for nu in pt.sub_partitions(beta):
        f = sf.zero()
        for tau in pt.sub_partitions(alpha):
            if sum(tau) != sum(beta) - sum(nu):
                continue
            kr = sf.kronecker(sf.skew_schur(beta, nu), sf.schur(tau))
            if kr.is_zero():
                continue
            f = sf.add(f, sf.mul(kr, sf.skew_schur(alpha, tau)))
        if not f.is_zero():
            out.append((nu, f))
    return out


def _chk_thm_main_5(prm):
    a, b = prm["alpha"], prm["beta"]
    lhs = op.KB(sf.schur(b)) * op.U(sf.schur(a))
    rhs = op.zero_op()
    for nu, f in _kbu_terms(a, b):
        rhs = rhs + op.U(f) * op.KB(sf.schur(nu))
    return _ops_equal(prm, [lhs, rhs], prm["vector_bound"])


def _chk_thm_main_6(prm):
    a, b = prm["alpha"], prm["beta"]
    lhs = op.D(sf.schur(a)) * op.KB(sf.schur(b))
    rhs = op.zero_op()
    for nu, f in _kbu_terms(a, b):
        rhs = rhs + op.KB(sf.schur(nu)) * op.D(f)
    return _ops_equal(prm, [lhs, rhs], prm["vector_bound"])


# ---------------------------------------------------------------------------
# the same six relations in structure-constant form

def _cor_coeffs_du(alpha, beta, twisted):
    """(mu, nu) -> sum_lam c^alpha_{lam,mu} c^beta_{lam,nu}, with lam
    conjugated and sign-weighted in the twisted variant."""
    acc = {}
    for lam in pt.sub_partitions(alpha):
        lam2 = pt.conjugate(lam) if twisted else lam
        if not pt.contains(lam2, beta):
            continue
        sign = (-1 if sum(lam) % 2 else 1) if twisted else 1
        for mu in pt.partitions_of(sum(alpha) - sum(lam)):
            c1 = coeffs.lr_coeff(alpha, lam, mu)
            if not c1:
                continue
            for nu in pt.partitions_of(sum(beta) - sum(lam2)):
                c2 = coeffs.lr_coeff(beta, lam2, nu)
                if c2:
                    key = (mu, nu)
                    acc[key] = acc.get(key, 0) + sign * c1 * c2
    return acc


def _chk_thm_main_cor_1(prm):
    a, b = prm["alpha"], prm["beta"]
    lhs = op.D(sf.schur(b)) * op.U(sf.schur(a))
    rhs = op.zero_op()
    for (mu, nu), c in _cor_coeffs_du(a, b, False).items():
        rhs = rhs + c * (op.U(sf.schur(mu)) * op.D(sf.schur(nu)))
    return _ops_equal(prm, [lhs, rhs], prm["vector_bound"])


def _chk_thm_main_cor_2(prm):
    a, b = prm["alpha"], prm["beta"]
    lhs = op.U(sf.schur(a)) * op.D(sf.schur(b))
    rhs = op.zero_op()
    for (mu, nu), c in _cor_coeffs_du(a, b, True).items():
        rhs = rhs + c * (op.D(sf.schur(nu)) * op.U(sf.schur(mu)))
    return _ops_equal(prm, [lhs, rhs], prm["vector_bound"])


def _cor_coeffs_ku(alpha, beta):
    """(mu, nu) -> sum_lam g_{alpha,lam,mu} c^beta_{lam,nu}."""
    acc = {}
    n = sum(alpha)
    for lam in pt.partitions_of(n):
        if not pt.contains(lam, beta):
            continue
        for nu in pt.partitions_of(sum(beta) - n):
            c = coeffs.lr_coeff(beta, lam, nu)
            if not c:
                continue
            for mu in pt.partitions_of(n):
                g = coeffs.kron_coeff(alpha, lam, mu)
                if g:
                    key = (mu, nu)
                    acc[key] = acc.get(key, 0) + g * c
    return acc


def _chk_thm_main_cor_3(prm):
    a, b = prm["alpha"], prm["beta"]
    lhs = op.K(sf.schur(b)) * op.U(sf.schur(a))
    rhs = op.zero_op()
    for (mu, nu), c in _cor_coeffs_ku(a, b).items():
        rhs = rhs + c * (op.U(sf.schur(mu)) * op.K(sf.schur(nu)))
    return _ops_equal(prm, [lhs, rhs], prm["vector_bound"])


def _chk_thm_main_cor_4(prm):
    a, b = prm["alpha"], prm["beta"]
    lhs = op.D(sf.schur(a)) * op.K(sf.schur(b))
    rhs = op.zero_op()
    for (mu, nu), c in _cor_coeffs_ku(a, b).items():
        rhs = rhs + c * (op.K(sf.schur(nu)) * op.D(sf.schur(mu)))
    return _ops_equal(prm, [lhs, rhs], prm["vector_bound"])


def _cor_coeffs_kbu(alpha, beta):
    """(mu, nu) -> sum over lam, sigma, tau, theta of
    g_{lam,tau,theta} c^beta_{lam,nu} c^alpha_{tau,sigma} c^mu_{theta,sigma}."""
    acc = {}
    for nu in pt.sub_partitions(beta):
        k = sum(beta) - sum(nu)
        for lam in pt.partitions_of(k):
            c_bn = coeffs.lr_coeff(beta, nu, lam)
            if not c_bn:
                continue
            for tau in pt.sub_partitions(alpha, max_size=k):
                if sum(tau) != k:
                    continue
                for sigma in pt.partitions_of(sum(alpha) - k):
                    c_as = coeffs.lr_coeff(alpha, tau, sigma)
                    if not c_as:
                        continue
                    for theta in pt.partitions_of(k):
                        g = coeffs.kron_coeff(lam, tau, theta)
                        if not g:
                            continue
                        w = g * c_bn * c_as
                        for mu, cm in sf._schur_mul_terms(theta, sigma):
                            key = (mu, nu)
                            acc[key] = acc.get(key, 0) + w * int(cm)
    return acc


def _chk_thm_main_cor_5(prm):
    a, b = prm["alpha"], prm["beta"]
    lhs = op.KB(sf.schur(b)) * op.U(sf.schur(a))
    rhs = op.zero_op()
    for (mu, nu), c in _cor_coeffs_kbu(a, b).items():
        rhs = rhs + c * (op.U(sf.schur(mu)) * op.KB(sf.schur(nu)))
    return _ops_equal(prm, [lhs, rhs], prm["vector_bound"])


def _chk_thm_main_cor_6(prm):
    a, b = prm["alpha"], prm["beta"]
    lhs = op.D(sf.schur(a)) * op.KB(sf.schur(b))
    rhs = op.zero_op()
    for (mu, nu), c in _cor_coeffs_kbu(a, b).items():
        rhs = rhs + c * (op.KB(sf.schur(nu)) * op.D(sf.schur(mu)))
    return _ops_equal(prm, [lhs, rhs], prm["vector_bound"])


def normal_order_forms(i, alpha, beta):
    """The i-th of the six normal ordering relations, i in 1..6.

    Returns (lhs, skew-sum RHS, structure-constant RHS) as OperatorExprs,
    so the two stated right-hand sides can be compared instance by
    instance.
    """
    a = pt.make_partition(alpha)
    b = pt.make_partition(beta)
    sa, sb = sf.schur(a), sf.schur(b)
    if i == 1:
        lhs = op.D(sb) * op.U(sa)
        skew_rhs = _rhs_du(a, b)
        coef_rhs = op.zero_op()
        for (mu, nu), c in _cor_coeffs_du(a, b, False).items():
            coef_rhs = coef_rhs + c * (op.U(sf.schur(mu)) * op.D(sf.schur(nu)))
    elif i == 2:
        lhs = op.U(sa) * op.D(sb)
        skew_rhs = _rhs_ud(a, b)
        coef_rhs = op.zero_op()
        for (mu, nu), c in _cor_coeffs_du(a, b, True).items():
            coef_rhs = coef_rhs + c * (op.D(sf.schur(nu)) * op.U(sf.schur(mu)))
    elif i == 3:
        lhs = op.K(sb) * op.U(sa)
        skew_rhs = _rhs_ku(a, b)
        coef_rhs = op.zero_op()
        for (mu, nu), c in _cor_coeffs_ku(a, b).items():
            coef_rhs = coef_rhs + c * (op.U(sf.schur(mu)) * op.K(sf.schur(nu)))
    elif i == 4:
        lhs = op.D(sa) * op.K(sb)
        skew_rhs = _rhs_dk(a, b)
        coef_rhs = op.zero_op()
        for (mu, nu), c in _cor_coeffs_ku(a, b).items():
            coef_rhs = coef_rhs + c * (op.K(sf.schur(nu)) * op.D(sf.schur(mu)))
    elif i == 5:
        lhs = op.KB(sb) * op.U(sa)
        skew_rhs = op.zero_op()
        for nu, f in _kbu_terms(a, b):
            skew_rhs = skew_rhs + op.U(f) * op.KB(sf.schur(nu))
        coef_rhs = op.zero_op()
        for (mu, nu), c in _cor_coeffs_kbu(a, b).items():
            coef_rhs = coef_rhs + c * (op.U(sf.schur(mu)) * op.KB(sf.schur(nu)))
    elif i == 6:
        lhs = op.D(sa) * op.KB(sb)
        skew_rhs = op.zero_op()
        for nu, f in _kbu_terms(a, b):
            skew_rhs = skew_rhs + op.KB(sf.schur(nu)) * op.D(f)
        coef_rhs = op.zero_op()
        for (mu, nu), c in _cor_coeffs_kbu(a, b).items():
            coef_rhs = coef_rhs + c * (op.KB(sf.schur(nu)) * op.D(sf.schur(mu)))
    else:
        raise ValueError(f"relation index {i} not in 1..6")
    return lhs, skew_rhs, coef_rhs


# ---------------------------------------------------------------------------
# commutators

def _chk_commutators_1(prm):
    a, b = prm["alpha"], prm["beta"]
    sa, sb = sf.schur(a), sf.schur(b)
    comm = op.D(sb) * op.U(sa) - op.U(sa) * op.D(sb)
    first = op.zero_op()
    second = op.zero_op()
    for lam in pt.sub_partitions(a):
        if not lam:
            continue
        if pt.contains(lam, b):
            first = first + op.U(sf.skew_schur(a, lam)) * op.D(
                sf.skew_schur(b, lam)
            )
        lamc = pt.conjugate(lam)
        if pt.contains(lamc, b):
            sign = 1 if (sum(lam) - 1) % 2 == 0 else -1
            second = second + sign * (
                op.D(sf.skew_schur(b, lamc)) * op.U(sf.skew_schur(a, lam))
            )
    return _ops_equal(prm, [comm, first, second], prm["vector_bound"])


def _chk_commutators_2(prm):
    a, b = prm["alpha"], prm["beta"]
    sa, sb = sf.schur(a), sf.schur(b)
    comm = op.KB(sb) * op.U(sa) - op.U(sa) * op.KB(sb)
    rhs = op.zero_op()
    for nu in pt.sub_partitions(b):
        f = sf.zero()
        for tau in pt.sub_partitions(a):
            if (tau, nu) == ((), b) or sum(tau) != sum(b) - sum(nu):
                continue
            kr = sf.kronecker(sf.skew_schur(b, nu), sf.schur(tau))
            if kr.is_zero():
                continue
            f = sf.add(f, sf.mul(kr, sf.skew_schur(a, tau)))
        if not f.is_zero():
            rhs = rhs + op.U(f) * op.KB(sf.schur(nu))
    return _ops_equal(prm, [comm, rhs], prm["vector_bound"])


def _chk_commutators_3(prm):
    a, b = prm["alpha"], prm["beta"]
    sa, sb = sf.schur(a), sf.schur(b)
    comm = op.D(sa) * op.KB(sb) - op.KB(sb) * op.D(sa)
    rhs = op.zero_op()
    for nu in pt.sub_partitions(b):
        f = sf.zero()
        for tau in pt.sub_partitions(a):
            if (tau, nu) == ((), b) or sum(tau) != sum(b) - sum(nu):
                continue
            kr = sf.kronecker(sf.skew_schur(b, nu), sf.schur(tau))
            if kr.is_zero():
                continue
            f = sf.add(f, sf.mul(kr, sf.skew_schur(a, tau)))
        if not f.is_zero():
            rhs = rhs + op.KB(sf.schur(nu)) * op.D(f)
    return _ops_equal(prm, [comm, rhs], prm["vector_bound"])


# ---------------------------------------------------------------------------
# classical product identities

def _fg_instances(bounds):
    out = []
    for b in pt.partitions_upto(bounds.max_ab):
        for x in pt.partitions_upto(bounds.max_g):
            for y in pt.partitions_upto(bounds.max_g - sum(x)):
                out.append({"beta": b, "f": x, "g": y})
    return out


def _chk_foulkes(prm):
    b, x, y = prm["beta"], prm["f"], prm["g"]
    fx, gy, sb = sf.schur(x), sf.schur(y), sf.schur(b)
    lhs = sf.skew(sf.mul(fx, gy), sb)
    rhs = sf.zero()
    for lam in pt.sub_partitions(b):
        for mu in pt.partitions_of(sum(b) - sum(lam)):
            c = coeffs.lr_coeff(b, lam, mu)
            if not c:
                continue
            rhs = sf.add(
                rhs,
                sf.scale(c, sf.mul(sf.skew(fx, sf.schur(lam)),
                                   sf.skew(gy, sf.schur(mu)))),
            )
    return _sym_equal(prm, lhs, rhs)


def _chk_littlewood(prm):
    b, x, y = prm["beta"], prm["f"], prm["g"]
    fx, gy, sb = sf.schur(x), sf.schur(y), sf.schur(b)
    lhs = sf.kronecker(sb, sf.mul(fx, gy))
    rhs = sf.zero()
    for lam in pt.sub_partitions(b):
        for mu in pt.partitions_of(sum(b) - sum(lam)):
            c = coeffs.lr_coeff(b, lam, mu)
            if not c:
                continue
            rhs = sf.add(
                rhs,
                sf.scale(c, sf.mul(sf.kronecker(sf.schur(mu), fx),
                                   sf.kronecker(sf.schur(lam), gy))),
            )
    return _sym_equal(prm, lhs, rhs)


def _chk_similar(prm):
    b, x, y = prm["beta"], prm["f"], prm["g"]
    fx, gy, sb = sf.schur(x), sf.schur(y), sf.schur(b)
    lhs = sf.skew(sf.kronecker(fx, gy), sb)
    rhs = sf.zero()
    k = sum(b)
    for lam in pt.partitions_of(k):
        for mu in pt.partitions_of(k):
            g = coeffs.kron_coeff(b, lam, mu)
            if not g:
                continue
            rhs = sf.add(
                rhs,
                sf.scale(g, sf.kronecker(sf.skew(fx, sf.schur(lam)),
                                         sf.skew(gy, sf.schur(mu)))),
            )
    return _sym_equal(prm, lhs, rhs)


def _rf_instances(bounds):
    return [
        {"alpha": a, "beta": b, "gamma": g}
        for a, b in _pairs(bounds.max_ab)
        for g in pt.partitions_upto(bounds.max_g)
    ]


def _chk_reverse_foulkes(prm):
    a, b, g = prm["alpha"], prm["beta"], prm["gamma"]
    lhs = sf.mul(sf.schur(a), sf.skew_schur(g, b))
    rhs = sf.zero()
    for lam in pt.sub_partitions(a):
        lamc = pt.conjugate(lam)
        if not pt.contains(lamc, b):
            continue
        sign = -1 if sum(lam) % 2 else 1
        inner = sf.mul(sf.skew_schur(a, lam), sf.schur(g))
        rhs = sf.add(rhs, sf.scale(sign, sf.skew(inner, sf.skew_schur(b, lamc))))
    return _sym_equal(prm, lhs, rhs)


# ---------------------------------------------------------------------------
# one-row and one-column special cases

def _row(k):
    return sf.schur((k,)) if k else sf.one()


def _col(k):
    return sf.schur((1,) * k) if k else sf.one()


def _gessel_instances(lo):
    def gen(bounds):
        return [
            {"m": m, "n": n, "vector_bound": bounds.max_g}
            for m in range(lo, bounds.max_ab + 1)
            for n in range(lo, bounds.max_ab + 1)
        ]

    return gen


def _chk_gessel_1(prm):
    m, n = prm["m"], prm["n"]
    lhs = op.D(_row(n)) * op.U(_row(m))
    rhs = op.zero_op()
    for i in range(min(m, n) + 1):
        rhs = rhs + op.U(_row(m - i)) * op.D(_row(n - i))
    return _ops_equal(prm, [lhs, rhs], prm["vector_bound"])


def _chk_gessel_2(prm):
    m, n = prm["m"], prm["n"]
    lhs = op.U(_row(m)) * op.D(_row(n))
    rhs = op.D(_row(n)) * op.U(_row(m)) - op.D(_row(n - 1)) * op.U(_row(m - 1))
    return _ops_equal(prm, [lhs, rhs], prm["vector_bound"])


def _chk_gessel_3(prm):
    m, n = prm["m"], prm["n"]
    lhs = op.D(_col(n)) * op.U(_row(m))
    rhs = op.U(_row(m)) * op.D(_col(n)) + op.U(_row(m - 1)) * op.D(_col(n - 1))
    return _ops_equal(prm, [lhs, rhs], prm["vector_bound"])


# ---------------------------------------------------------------------------
# the straightened Kronecker family in terms of U and D

def _chk_kb1(prm):
    lhs = op.KB(sf.schur((1,)))
    rhs = op.U(sf.schur((1,))) * op.D(sf.schur((1,))) - op.identity_op()
    return _ops_equal(prm, [lhs, rhs], prm["vector_bound"])


def _chk_straightcorners(prm):
    a = prm["alpha"]
    sa = sf.schur(a)
    lhs = op.apply_KB(sf.schur((1,)), sa)
    rhs = sf.scale(pt.noc(a) - 1, sa)
    for b in pt.addremove_set(a):
        rhs = sf.add(rhs, sf.schur(b))
    return _sym_equal(prm, lhs, rhs)


def _chk_kbk_ud(prm):
    k = prm["k"]
    lhs = op.KB(_row(k))
    rhs = op.zero_op()
    for lam in pt.partitions_of(k):
        rhs = rhs + op.U(sf.schur(lam)) * op.D(sf.schur(lam))
    for lam in pt.partitions_of(k - 1):
        rhs = rhs - op.U(sf.schur(lam)) * op.D(sf.schur(lam))
    return _ops_equal(prm, [lhs, rhs], prm["vector_bound"])


def _chk_kbf_ud(prm):
    lam, vb = prm["lam"], prm["vector_bound"]
    f = sf.schur(lam)
    expr = op.kb_as_UD(f, vb)
    checked = 0
    failures = []
    for gamma in pt.partitions_upto(vb):
        g = sf.schur(gamma)
        checked += 1
        lhs = expr.apply(g)
        rhs = op.apply_KB(f, g)
        if lhs != rhs:
            failures.append(Failure({**prm, "gamma": gamma}, lhs, rhs))
    return checked, failures


def _chk_tworow_hook(prm):
    a, k, vb = prm["alpha"], prm["k"], prm["vector_bound"]
    sa = sf.schur(a)
    checked = 0
    failures = []

    def row_sum(q, conj):
        total = sf.zero()
        for rho in pt.partitions_of(q):
            fac = sf.schur(pt.conjugate(rho)) if conj else sf.schur(rho)
            total = sf.add(total, sf.mul(sf.skew_schur(a, rho), fac))
        return total

    # operator forms, two-row and hook index
    for conj, idx in ((False, _row), (True, _col)):
        lhs = op.KB(idx(k)) * op.U(sa)
        rhs = op.zero_op()
        for j in range(k + 1):
            f = row_sum(k - j, conj)
            if not f.is_zero():
                rhs = rhs + op.U(f) * op.KB(idx(j))
        c, fl = _ops_equal({**prm, "index": "hook" if conj else "two-row"},
                           [lhs, rhs], vb)
        checked += c
        failures += fl
    # straightened product forms on s_gamma
    for conj, idx in ((False, _row), (True, _col)):
        for gamma in pt.partitions_upto(vb):
            g = sf.schur(gamma)
            lhs = op.apply_KB(idx(k), sf.mul(sa, g))
            rhs = sf.zero()
            for j in range(k + 1):
                f = row_sum(k - j, conj)
                if f.is_zero():
                    continue
                rhs = sf.add(rhs, sf.mul(f, op.apply_KB(idx(j), g)))
            checked += 1
            if lhs != rhs:
                failures.append(
                    Failure({**prm, "gamma": gamma,
                             "index": "hook" if conj else "two-row"},
                            lhs, rhs)
                )
    return checked, failures


def _chk_littlewood_sum(prm):
    a, q = prm["alpha"], prm["q"]
    n = sum(a)
    sa = sf.schur(a)
    checked = 0
    failures = []
    lhs_h = sf.zero()
    lhs_e = sf.zero()
    for rho in pt.partitions_of(q):
        piece = sf.skew_schur(a, rho)
        lhs_h = sf.add(lhs_h, sf.mul(piece, sf.schur(rho)))
        lhs_e = sf.add(lhs_e, sf.mul(piece, sf.schur(pt.conjugate(rho))))
    rhs_h = sf.kronecker(sa, sf.mul(sf.h(n - q), sf.h(q)))
    rhs_e = sf.kronecker(sa, sf.mul(sf.h(n - q), sf.e(q)))
    for tag, lhs, rhs in (("h", lhs_h, rhs_h), ("e", lhs_e, rhs_e)):
        checked += 1
        if lhs != rhs:
            failures.append(Failure({**prm, "version": tag}, lhs, rhs))
    return checked, failures


def _theta_instances(min_gap):
    def gen(bounds):
        out = []
        for a in pt.partitions_upto(bounds.max_g):
            for t in pt.sub_partitions(a):
                if sum(a) - sum(t) >= min_gap:
                    out.append({"alpha": a, "theta": t})
        return out

    return gen


def _skew_kron_lhs(a, t):
    n, k = sum(a), sum(t)
    return sf.kronecker(sf.skew_schur(a, t), sf.schur((n - k - 1, 1)))


def _chk_skew_corners(prm):
    a, t = prm["alpha"], prm["theta"]
    return _sym_equal(prm, _skew_kron_lhs(a, t), tb.skew_corners_rhs(a, t))


def _chk_nokronecker(prm):
    a, t = prm["alpha"], prm["theta"]
    rhs = sf.zero()
    for d in pt.add_set(t):
        rhs = sf.add(rhs, sf.skew_schur(a, d))
    rhs = sf.add(sf.mul(sf.schur((1,)), rhs), sf.scale(-1, sf.skew_schur(a, t)))
    return _sym_equal(prm, _skew_kron_lhs(a, t), rhs)


def _chk_tabmanip2(prm):
    a, t = prm["alpha"], prm["theta"]
    lhs = sf.zero()
    for gamma in pt.add_set(a):
        for delta in pt.add_restrict(t, a):
            lhs = sf.add(lhs, sf.skew_schur(gamma, delta))
    coef = len(pt.add_set(a)) - len(pt.add_complement(t, a))
    rhs = sf.scale(coef, sf.skew_schur(a, t))
    for beta in pt.addremove_set(a):
        rhs = sf.add(rhs, sf.skew_schur(beta, t))
    checked, failures = _sym_equal(prm, lhs, rhs)
    bij = tb.verify_jdt_bijection(a, t)
    checked += bij.instances
    failures += bij.failures
    return checked, failures


# ---------------------------------------------------------------------------
# the catalog

def _single(**fixed):
    def gen(bounds):
        prm = dict(fixed)
        prm.setdefault("vector_bound", bounds.max_g)
        return [prm]

    return gen


def _alpha_instances(bounds):
    return [{"alpha": a} for a in pt.partitions_upto(bounds.max_g)]


def _k_instances(bounds):
    return [
        {"k": k, "vector_bound": bounds.max_g}
        for k in range(1, bounds.max_ab + 1)
    ]


def _lam_instances(bounds):
    return [
        {"lam": lam, "vector_bound": bounds.max_g}
        for lam in pt.partitions_upto(bounds.max_ab)
    ]


def _tworow_instances(bounds):
    return [
        {"alpha": a, "k": k, "vector_bound": bounds.max_g}
        for a in pt.partitions_upto(bounds.max_ab)
        for k in range(1, bounds.max_ab + 1)
    ]


def _lsum_instances(bounds):
    return [
        {"alpha": a, "q": q}
        for a in pt.partitions_upto(bounds.max_g)
        for q in range(0, min(sum(a), bounds.max_ab) + 1)
    ]


CATALOG = {}


def _register(ident, formula, instances, check):
    CATALOG[ident] = Entry(ident, formula, instances, check)


_register("thm_main_1", "D_b U_a = sum_l U_{a/l} D_{b/l}",
          _ab_instances, _chk_thm_main_1)
_register("thm_main_2", "U_a D_b = sum_l (-1)^|l| D_{b/l'} U_{a/l}",
          _ab_instances, _chk_thm_main_2)
_register("thm_main_3", "K_b U_a = sum_l U_{s_{b/l} * s_a} K_l",
          _ab_instances, _chk_thm_main_3)
_register("thm_main_4", "D_a K_b = sum_l K_l D_{s_{b/l} * s_a}",
          _ab_instances, _chk_thm_main_4)
_register("thm_main_5",
          "KB_b U_a = sum_{t,n} U_{(s_{b/n} * s_t) s_{a/t}} KB_n",
          _ab_instances, _chk_thm_main_5)
_register("thm_main_6",
          "D_a KB_b = sum_{t,n} KB_n D_{(s_{b/n} * s_t) s_{a/t}}",
          _ab_instances, _chk_thm_main_6)
_register("thm_main_cor_1",
          "D_b U_a = sum_{m,n} (sum_l c^a_{l,m} c^b_{l,n}) U_m D_n",
          _ab_instances, _chk_thm_main_cor_1)
_register("thm_main_cor_2",
          "U_a D_b = sum_{m,n} (sum_l (-1)^|l| c^a_{l,m} c^b_{l',n}) D_n U_m",
          _ab_instances, _chk_thm_main_cor_2)
_register("thm_main_cor_3",
          "K_b U_a = sum_{m,n} (sum_l g_{a,l,m} c^b_{l,n}) U_m K_n",
          _ab_instances, _chk_thm_main_cor_3)
_register("thm_main_cor_4",
          "D_a K_b = sum_{m,n} (sum_l g_{a,l,m} c^b_{l,n}) K_n D_m",
          _ab_instances, _chk_thm_main_cor_4)
_register("thm_main_cor_5",
          "KB_b U_a expanded with g and three c coefficients",
          _ab_instances, _chk_thm_main_cor_5)
_register("thm_main_cor_6",
          "D_a KB_b expanded with g and three c coefficients",
          _ab_instances, _chk_thm_main_cor_6)
_register("commutators_1",
          "[D_b, U_a] = sum_{l != 0} U_{a/l} D_{b/l} "
          "= sum_{l != 0} (-1)^{|l|-1} D_{b/l'} U_{a/l}",
          _ab_instances, _chk_commutators_1)
_register("commutators_2",
          "[KB_b, U_a] = sum_{(t,n) != (0,b)} U_{(s_{b/n} * s_t) s_{a/t}} KB_n",
          _ab_instances, _chk_commutators_2)
_register("commutators_3",
          "[D_a, KB_b] = sum_{(t,n) != (0,b)} KB_n D_{(s_{b/n} * s_t) s_{a/t}}",
          _ab_instances, _chk_commutators_3)
_register("foulkes", "D_b(fg) = sum c^b_{l,m} D_l(f) D_m(g)",
          _fg_instances, _chk_foulkes)
_register("littlewood", "s_b * (fg) = sum c^b_{l,m} (s_m * f)(s_l * g)",
          _fg_instances, _chk_littlewood)
_register("similar", "D_b(f * g) = sum g_{b,l,m} D_l(f) * D_m(g)",
          _fg_instances, _chk_similar)
_register("reverse_foulkes",
          "s_a s_{g/b} = sum_l (-1)^|l| D_{b/l'}(s_{a/l} s_g)",
          _rf_instances, _chk_reverse_foulkes)
_register("gessel_1", "D_n U_m = sum_i U_{m-i} D_{n-i}",
          _gessel_instances(0), _chk_gessel_1)
_register("gessel_2", "U_m D_n = D_n U_m - D_{n-1} U_{m-1}",
          _gessel_instances(1), _chk_gessel_2)
_register("gessel_3", "D_{1^n} U_m = U_m D_{1^n} + U_{m-1} D_{1^{n-1}}",
          _gessel_instances(1), _chk_gessel_3)
_register("kb1", "KB_1 = U_1 D_1 - 1", _single(), _chk_kb1)
_register("straightcorners",
          "KB_1 s_a = (noc(a) - 1) s_a + sum_{b in addremove(a)} s_b",
          _alpha_instances, _chk_straightcorners)
_register("kbk_ud",
          "KB_(k) = sum_{l of k} U_l D_l - sum_{l of k-1} U_l D_l",
          _k_instances, _chk_kbk_ud)
_register("kbf_ud", "KB_f = sum_l U_{f[X-1] * s_l} D_l",
          _lam_instances, _chk_kbf_ud)
_register("tworow_hook",
          "KB_(k) U_a and KB_(1^k) U_a expansions, plus their product forms",
          _tworow_instances, _chk_tworow_hook)
_register("littlewood_sum",
          "sum_{r of q} s_{a/r} s_r = s_a * h_{n-q} h_q (and the e version)",
          _lsum_instances, _chk_littlewood_sum)
_register("skew_corners",
          "s_{a/t} * s_{(n-k-1,1)} = (noc(a)-noc(t)-1) s_{a/t} "
          "+ sum s_{b/t} - sum s_{a/f}",
          _theta_instances(2), _chk_skew_corners)
_register("nokronecker",
          "s_{a/t} * s_{(n-k-1,1)} = s_1 sum_{d in add(t)} s_{a/d} - s_{a/t}",
          _theta_instances(2), _chk_nokronecker)
_register("tabmanip2",
          "sum_{g,d} s_{g/d} = (|add a| - |addcomplement|) s_{a/t} "
          "+ sum_b s_{b/t}, checked algebraically and by the jdt bijection",
          _theta_instances(0), _chk_tabmanip2)


def verify_instance(ident, params):
    """Check one catalog identity at explicit parameters."""
    if ident not in CATALOG:
        raise ValueError(f"unknown identity {ident!r}")
    entry = CATALOG[ident]
    start = time.perf_counter()
    try:
        checked, failures = entry.check(dict(params))
    except KeyError as exc:
        raise ValueError(f"malformed params for {ident}: missing {exc}") from None
    return VerificationReport(
        identity=ident,
        params=dict(params),
        instances=checked,
        failures=failures,
        elapsed=time.perf_counter() - start,
    )


def _run_entry(entry, bounds):
    start = time.perf_counter()
    checked = 0
    failures = []
    for prm in entry.instances(bounds):
        c, fl = entry.check(prm)
        checked += c
        failures += fl
    return VerificationReport(
        identity=entry.ident,
        params=f"bounds max_ab={bounds.max_ab} max_g={bounds.max_g}",
        instances=checked,
        failures=failures,
        elapsed=time.perf_counter() - start,
    )


def run_suite(bounds=Bounds(), ids=None):
    """Run catalog entries over all parameter instances within bounds.

    Entries run independently (optionally in parallel, capped by the
    SYMOP_THREADS environment variable); reports come back in catalog
    order regardless.
    """
    if bounds.max_ab < 0 or bounds.max_g < 0:
        raise ValueError("bounds must be nonnegative")
    if ids is None:
        entries = list(CATALOG.values())
    else:
        unknown = [i for i in ids if i not in CATALOG]
        if unknown:
            raise ValueError(f"unknown identities {unknown}")
        entries = [CATALOG[i] for i in ids]
    workers = int(os.environ.get("SYMOP_THREADS", "1") or "1")
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda e: _run_entry(e, bounds), entries))
    return [_run_entry(e, bounds) for e in entries]
