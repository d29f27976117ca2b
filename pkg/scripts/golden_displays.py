"""Print the displayed triangles and their SDR verdicts side by side."""

from sdrmatrix.algebra import matmul, tri_inverse
from sdrmatrix.cli import format_window
from sdrmatrix.minors import minor_triangle
from sdrmatrix.riordan import aerated_pair, riordan_inverse, riordan_window
from sdrmatrix.sdr import check_order, max_order
from sdrmatrix.triangle import materialize


def show(title, w, cap=8):
    m, _ = max_order(w, min(cap, w.n_rows)) if w.n_rows >= 3 else (None, None)
    print(f"--- {title}  (max verified order on {w.n_rows} rows: {m})")
    print(format_window(w.truncate(min(6, w.n_rows))))


def main():
    P, N = materialize("builtin:pascal", 12), materialize("builtin:narayana", 12)
    A = materialize("builtin:aerated", 12)
    show("Pascal", P)
    show("Narayana", N)
    show("Lah", materialize("builtin:lah", 12))
    show("Pascal x Narayana", matmul(P, N))
    show("Narayana inverse", tri_inverse(N))
    show("aerated binomial", A)
    show("aerated A_[2]", minor_triangle(A, 2), cap=3)
    show("aerated A_[3]", minor_triangle(A, 3), cap=3)
    inv = riordan_inverse(aerated_pair(12))
    print(f"aerated inverse pair: d = {inv.d}\n                      h = {inv.h}")
    show("aerated inverse", riordan_window(inv, 12))
    print("A_[2] order-3 violations:",
          [(v.p, v.r, v.n, v.k) for v in check_order(minor_triangle(A.truncate(6), 2), 3).violations])


if __name__ == "__main__":
    main()
