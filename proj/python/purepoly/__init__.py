"""Newton-polygon classification, iteration and factorization of polynomials over Q."""

import json

from . import _purepoly

__all__ = [
    "PurepolyError",
    "run",
    "operations",
    "canonical",
    "classify",
    "newton",
    "iterate",
    "factor",
    "certify",
    "eventual",
    "ff_factor",
]


class PurepolyError(Exception):
    """Raised for parse, precondition and hypothesis failures. `kind` names the error."""

    def __init__(self, payload):
        self.details = payload
        self.kind = payload.get("kind", "Error")
        super().__init__(f"{self.kind}: {payload.get('message', '')}")


def run(op, **args):
    """Run a named operation; keyword values are converted to strings, lists joined with ';'.

    A trailing underscore is dropped from argument names, so `with_=` passes `with`.
    """
    text = {}
    for key, value in args.items():
        if value is None:
            continue
        key = key.rstrip("_")
        if isinstance(value, (list, tuple, set)):
            value = ";".join(str(v) for v in value)
        text[key] = str(value)
    try:
        return json.loads(_purepoly.run(op, text))
    except _purepoly.PurepolyError as e:
        raise PurepolyError(json.loads(str(e))["error"]) from None


def operations():
    return list(_purepoly.operations())


def canonical(poly):
    try:
        return _purepoly.canonical(poly)
    except _purepoly.PurepolyError as e:
        raise PurepolyError(json.loads(str(e))["error"]) from None


def classify(poly, prime, r=None):
    return run("classify", poly=poly, prime=prime, r=r)


def newton(poly, prime):
    return run("newton", poly=poly, prime=prime)


def iterate(poly, n, inner=None):
    return run("iterate", poly=poly, n=n, inner=inner)


def factor(poly, verify=None):
    return run("factor", poly=poly, verify=verify)


def certify(poly, prime=None):
    return run("certify", poly=poly, prime=prime)


def eventual(poly, prime, mode="type", r=None):
    return run("eventual", poly=poly, prime=prime, mode=mode, r=r)


def ff_factor(poly, prime, iterate=1):
    return run("ff", sub="factor", poly=poly, prime=prime, iterate=iterate)
