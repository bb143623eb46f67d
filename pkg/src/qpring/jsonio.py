"""JSON encoding of library results.  Every number is a decimal string."""

from .intpoly import IntPolynomial
from .quasipoly import QuasiPolynomial


def poly_to_json(p):
    return [str(c) for c in p.coeffs]


def poly_from_json(data):
    return IntPolynomial([int(c) for c in data])


def quasi_to_json(f):
    f = f.canonical()
    return {"period": str(f.period), "pieces": [poly_to_json(p) for p in f.pieces]}


def quasi_from_json(data):
    pieces = [poly_from_json(p) for p in data["pieces"]]
    return QuasiPolynomial(int(data["period"]), pieces).canonical()


def division_to_json(res):
    return {
        "quo": quasi_to_json(res.quo),
        "rem": quasi_to_json(res.rem),
        "threshold_pos": str(res.threshold_pos),
        "threshold_neg": str(res.threshold_neg),
        "neg_quo": quasi_to_json(res.neg_quo),
        "neg_rem": quasi_to_json(res.neg_rem),
    }


def gcd_to_json(res):
    return {
        "d": quasi_to_json(res.d),
        "bezout": [quasi_to_json(u) for u in res.bezout],
        "method": res.method,
    }


def _branch_to_json(branch):
    return {
        "threshold": str(branch.threshold),
        "period": str(branch.period),
        "classes": [[poly_to_json(t) for t in terms] for terms in branch.classes],
    }


def cf_to_json(pcf):
    return {
        "pos": _branch_to_json(pcf.pos),
        "neg": _branch_to_json(pcf.neg),
        "exceptional": {str(n): [str(a) for a in terms] for n, terms in sorted(pcf.exceptional.items())},
        "bound": str(pcf.term_bound),
    }


def smith_to_json(data):
    return {
        "det_factors": [quasi_to_json(d) for d in data.det_factors],
        "inv_factors": [quasi_to_json(d) for d in data.inv_factors],
        "shape": [str(k) for k in data.shape],
        "transposed": data.transposed,
    }
