"""Smoke tests for the python module against frozen anchor values."""

import math
import sys

import splitgeom as sg


def close(a, b, tol=1e-12):
    return abs(a - b) <= tol


def main():
    # algebra relations
    i = sg.SplitQuaternion(0, 1, 0, 0)
    s = sg.SplitQuaternion(0, 0, 1, 0)
    t = sg.SplitQuaternion(0, 0, 0, 1)
    ist = i * s
    assert close(ist.z, 1) and close(ist.w, 0), "i*s must be t"
    si = s * i
    assert close(si.z, -1), "s*i must be -t"
    assert close(i.norm_sq(), 1) and close(s.norm_sq(), -1)
    zero = (sg.SplitQuaternion(1, 0, 1, 0) * sg.SplitQuaternion(1, 0, -1, 0))
    assert close(zero.norm_sq(), 0) and close(zero.w, 0), "zero divisors exist"

    try:
        sg.SplitQuaternion(1, 0, 1, 0).inverse()
        raise AssertionError("inverting a zero divisor must raise")
    except sg.NullDivisorError:
        pass

    adj = sg.adjoint_matrix(i)
    assert adj[0][0] == 1 and adj[1][1] == -1 and adj[2][2] == -1

    assert sg.classify(sg.ImSplit(1, 0, 0)) == "spacelike"
    assert sg.classify(sg.ImSplit(1, 1, 0)) == "null"

    # calibration constants
    cal = sg.calibration()
    assert cal["sign_table"] == [-1, -1, -1]
    assert cal["bracket_sign"] == -1.0

    # flat model: rho0 = |h|^2 / 2, rho2 = 0
    h = sg.sample_spacelike(2, 0)
    hh = sg.metric(h, h)
    r = sg.rho(h)
    assert close(r["rho0"], 0.5 * hh, 1e-12 * (1 + hh))
    assert max(abs(v) for row in r["rho2"] for v in row) <= 1e-10
    assert close(sg.kappa(sg.ImSplit(1, 0, 0), h), r["rho0"], 1e-12 * (1 + hh))

    e = sg.euler(h)
    assert max((a - b).norm_sq() for a, b in zip(e, h)) <= 1e-20

    rows = sg.flat_obstruction(1, 50, 0)
    assert len(rows) == 50
    assert max(row["rho2_maxnorm"] for row in rows) <= 1e-10

    # suites
    assert sg.algebra_suite(0, 2000)["pass"]
    assert sg.sasakian_suite(1, 10, 0)["pass"]

    # Nahm-Schmid: exact tanh/sech anchor
    su2 = sg.LieAlgebra.su2()
    assert su2.check()["ok"]
    assert su2.bracket([1, 0, 0], [0, 1, 0]) == [0, 0, 1]

    # exact solution T1 = -tanh(t) e1, T2 = sech(t) e2, T3 = sech(t) e3
    traj = sg.integrate(su2, [0, 0, 0], [0, 0, 0], [0, 1, 0], [0, 0, 1],
                        length=1.0, steps=400, reduced=True)
    cons = traj.conserved()
    assert all(abs(c - cons[0]) <= 1e-10 for c in cons)
    assert max(traj.moment_residual()) <= 1e-6
    assert close(cons[0], 2.0, 1e-12)
    t1 = traj.component(1)
    assert close(t1[-1][0], -math.tanh(1.0), 1e-8)

    doubled = traj.scaling(2.0)
    assert close(doubled.conserved()[0], 8.0, 1e-9)

    rot = traj.su11_act(sg.SplitQuaternion(0, 1, 0, 0))
    assert max(rot.moment_residual()) <= 1e-6

    deg = sg.degeneracy_scan(su2, "const-t2", 2.5, 3.7, samples=25, steps=400)
    assert len(deg["roots"]) == 1
    assert abs(deg["roots"][0] - math.pi) <= 1e-6

    print("python smoke: all assertions passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
