"""High-precision reference values frozen into the C++ tests.

Run with `python3 generate_oracles.py`. Everything here is evaluated with
mpmath at 50 digits and deliberately avoids the closed forms used by the
library: crossing-curve lengths are computed as products of cuff loops
built only from seam lengths, so they check the orthogeodesic/foot-offset
route independently.
"""
from mpmath import mp, mpf, cosh, sinh, acosh, asinh, exp, matrix

mp.dps = 50


def T(s):
    return matrix([[exp(s / 2), 0], [0, exp(-s / 2)]])


def R(d):
    return matrix([[cosh(d / 2), sinh(d / 2)], [sinh(d / 2), cosh(d / 2)]])


def length(m):
    return 2 * acosh(abs(m[0, 0] + m[1, 1]) / 2)


def seam(li, lj, lk):
    return acosh((cosh(lk / 2) + cosh(li / 2) * cosh(lj / 2)) / (sinh(li / 2) * sinh(lj / 2)))


def loop_left(pos, d, l):
    return T(pos) * R(-d) * T(l) * R(d) * T(-pos)


def loop_right(pos, d, l):
    return T(pos) * R(d) * T(-l) * R(-d) * T(-pos)


def x_piece(l, t, la, lb, lc, ld):
    """Cuff loops of two pants glued along a curve of length l with twist t.

    la/lc are the cuffs whose seams are the twist reference of each side.
    Returns the consistently oriented products whose classes are the
    crossing curves of arc type 0 (wrap 0) and arc type 1 (wraps 0, 1).
    """
    a = loop_left(0, seam(l, la, lb), la)
    b = loop_left(l / 2, seam(l, lb, la), lb)
    c = loop_right(t, seam(l, lc, ld), lc)
    d = loop_right(t + l / 2, seam(l, ld, lc), ld)
    assert abs(length(a * b) - l) < mpf(10) ** -40
    assert abs(length(c * d) - l) < mpf(10) ** -40
    return {"type0_k0": length(a * c), "type1_k0": length(b * c), "type1_k1": length(a * d)}


def show(name, v):
    print(f"{name} = {mp.nstr(v, 20)}")


if __name__ == "__main__":
    show("seam_222", seam(2, 2, 2))
    show("seam_220_d12", seam(2, 2, 0))
    show("handle_2_2", acosh((cosh(2) + cosh(1) ** 2) / sinh(1) ** 2))
    show("asinh_1", asinh(1))
    # X-piece used by the golden tests: alpha = 0.9, cuffs 0.8/1.3 | 1.1/0.6
    for t in (mpf("0.35"), mpf("-0.35"), mpf("0.35") + mpf("0.9")):
        for k, v in x_piece(mpf("0.9"), t, mpf("0.8"), mpf("1.3"), mpf("1.1"), mpf("0.6")).items():
            show(f"xpiece t={mp.nstr(t, 6)} {k}", v)
    # one-holed torus: cuff 0.9 glued to itself, other cuff 1.4, twist 0.35
    d = seam(mpf("0.9"), mpf("0.9"), mpf("1.4"))
    show("handle crossing t=0.35", length(T(mpf("0.35")) * R(d)))
