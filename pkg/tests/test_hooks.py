from charcomb.arrays import array_rank, arrays_with, parse_array
from charcomb.formal import FormalSum
from charcomb.hooks import (HookPosition, hook_operator, hooks, leg_parity,
                            remove_hook)


def test_hooks_frozen_example():
    x = parse_array("{0,2,3|1}")
    assert hooks(x, 1, 0) == [HookPosition(2, 0), HookPosition(1, 1)]
    assert hooks(x, 1, 1) == [HookPosition(3, 0)]
    assert hooks(x, 2, 0) == [HookPosition(3, 0)]
    assert hooks(x, 2, 1) == [HookPosition(2, 0)]


def test_remove_hook_frozen_example():
    x = parse_array("{0,2,3|1}")
    got = [str(remove_hook(x, 1, 0, h)) for h in hooks(x, 1, 0)]
    assert got == ["{0,1,3|1}", "{0,2,3|0}"]
    assert str(remove_hook(x, 2, 0, hooks(x, 2, 0)[0])) == "{0,1,2|1}"


def test_remove_hook_drops_rank_by_d():
    for x in arrays_with(4, 4):
        for d in (1, 2, 3):
            for i in (0, 1):
                for h in hooks(x, d, i):
                    y = remove_hook(x, d, i, h)
                    assert array_rank(y) == array_rank(x) - d


def test_leg_parity_is_sign():
    x = parse_array("{0,2,3|1}")
    for h in hooks(x, 2, 0):
        assert leg_parity(x, 2, 0, h) in (1, -1)


def test_hook_operator_frozen():
    s = hook_operator(FormalSum.unit(parse_array("{0,2,3|1}")), 2, 0, 0)
    assert dict((str(k), c) for k, c in s) == {"{0,1,2|1}": -1}


def test_hook_operator_is_linear():
    x = parse_array("{0,2,3|1}")
    y = parse_array("{1,2|0}")
    s = FormalSum([(x, 2), (y, 3)])
    lhs = hook_operator(s, 1, 0, 0)
    rhs = (hook_operator(FormalSum.unit(x, 2), 1, 0, 0)
           + hook_operator(FormalSum.unit(y, 3), 1, 0, 0))
    assert lhs == rhs
