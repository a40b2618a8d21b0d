"""Lipschitz selections of polyhedral set-valued mappings in the l_inf plane."""

import json

from . import _core

__all__ = ["validate", "generate", "oracle", "lambda_constant", "select", "verify"]


def _text(instance):
    return instance if isinstance(instance, str) else json.dumps(instance)


def validate(instance):
    """List of violated instance invariants (empty when valid)."""
    return _core.validate(_text(instance))


def generate(kind, n, seed=0):
    return json.loads(_core.generate(kind, n, seed))


def oracle(instance):
    return json.loads(_core.oracle(_text(instance)))


def lambda_constant(instance, method="R"):
    return json.loads(_core.lambda_constant(_text(instance), method))


def select(instance, algo="driverR", a=1.0, b=1.0):
    """Run an algorithm. `a`, `b` are (lambda1, lambda2) for projection,
    lambda for iterative, gamma for the drivers and M for polygon."""
    return json.loads(_core.select(_text(instance), algo, a, b))


def verify(instance, selection, eps=1e-7):
    ok, seminorm = _core.verify(_text(instance), _text(selection), eps)
    return {"pass": ok, "recomputed_seminorm": seminorm}
