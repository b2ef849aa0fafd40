"""Smoke test for the python bindings: import, a few frozen values, and the
exception mapping. Runs under plain python3 and exits nonzero on failure."""

import math
import sys

import spherical_schwarz as ss


def approx(actual, expected, rel=1e-12, label=""):
    scale = max(1.0, abs(expected))
    if abs(actual - expected) > rel * scale:
        raise AssertionError(f"{label}: {actual!r} != {expected!r} (rel {rel})")


def main():
    # origin bounds and the pointwise envelope
    approx(ss.origin_upper(0.3), 3.0, label="origin_upper")
    approx(ss.origin_lower(0.3), 1.0 / 3.0, label="origin_lower")
    rep = ss.pointwise_bounds(0.3, 0.5)
    approx(rep.upper_refined, 3.6125143513943255, label="upper_refined")
    approx(rep.envelope, rep.upper_refined, label="envelope picks refined")
    assert rep.active_upper == ss.ActiveUpper.refined
    approx(ss.asymptotic_factor(1.0), (3.0 - math.sqrt(5.0)) / 2.0,
           label="asymptotic_factor(1)")

    # sphere geometry
    approx(ss.chordal_distance(ss.SpherePoint(0j), ss.SpherePoint(1 + 0j)),
           1.0 / math.sqrt(2.0), label="chordal")
    inf = ss.SpherePoint.infinity()
    assert inf.is_infinite()
    approx(ss.chordal_distance(ss.SpherePoint(0j), inf), 1.0, label="chordal to infinity")

    # extremal members attain the origin bound
    f = ss.make_extremal(0.3)
    approx(f.spherical_derivative(0j), 3.0, label="extremal origin")
    approx(ss.extremal_eta(0.25, ss.Branch.plus), 2.0 + math.sqrt(3.0),
           label="extremal_eta")

    # closed forms of the radial boundary problem
    sols = ss.closed_form_solutions(0.25)
    assert len(sols) == 2
    approx(sols[0].radial(0.0), 2.7032522580447073, label="u_plus(0)")
    approx(sols[1].radial(0.0), 0.0693364641950739, rel=1e-11, label="u_minus(0)")
    traj = ss.shoot(0.25, ss.SlopeBranch.minus)
    assert traj.interior_zero is not None
    approx(traj.interior_zero, -1.3169578969248167, rel=1e-7, label="interior zero")

    # refined self-map lemma
    approx(ss.sp_bound(0.5), 1.0410352085392202, rel=1e-13, label="sp_bound")
    ex = ss.construct_extremal_automorphism(0.5 + 0j)
    approx(abs(ex.attained - ss.sp_bound(0.5)), 0.0, rel=1e-10, label="attainment")

    # solution pair identity at one point
    pair = ss.integrate_pair([2.0 + 0j], [0.5j])
    approx(ss.spherical_via_pair(pair.samples[0]), 0.64805427366388540,
           rel=1e-10, label="pair identity at 0.5i")

    # rational norm bound
    poles = ss.PolePrescription([2.0 + 0j])
    approx(ss.kn(poles), 3.0, label="kn")
    approx(ss.norm_bound(poles, 0.1), 29.966629547095766, label="norm_bound")

    # witness family values
    g, rep_n = ss.gn_counterexample(2)
    approx(rep_n.origin_value, 4.0, label="g_2 origin")
    approx(rep_n.boundary_estimate, 0.29268292682926829, label="g_2 estimate")

    # exception mapping: infeasible and invalid configurations raise ValueError
    for bad in (lambda: ss.origin_upper(0.7), lambda: ss.origin_upper(-1.0),
                lambda: ss.sp_bound(0.0)):
        try:
            bad()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")

    print("python smoke: all checks passed")


if __name__ == "__main__":
    try:
        main()
    except AssertionError as err:
        print(f"python smoke: FAILED: {err}", file=sys.stderr)
        sys.exit(1)
