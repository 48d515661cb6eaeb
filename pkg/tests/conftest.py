from superspecial import kernels
from superspecial.ff import field

ACCEPTANCE_LINES = []


def quotient_scan(p, k):
    """Parameter sets whose curve (x^2-1) prod (x^2-a_i) has both quotients by
    x -> -x superspecial.  With u = x^2 the quotients are
    v^2 = (u-1) prod (u-a_i) and v^2 = u (u-1) prod (u-a_i); the Jacobian of the
    full curve is isogenous to the product of their Jacobians."""
    F = field(p)
    out = []
    for block in kernels.combination_chunks(list(range(2, F.order)), k):
        roots = [kernels.split_keys(F, block[:, j]) for j in range(k)]
        odd = kernels.batch_from_roots(F, [(p - 1, 0), (1, 0)], roots)
        even = kernels.batch_from_roots(F, [(0, 0), (p - 1, 0), (1, 0)], roots)
        ok = kernels.batch_superspecial(F, odd, k // 2) & kernels.batch_superspecial(F, even, (k + 1) // 2)
        out += [tuple(int(v) for v in row) for row in block[ok]]
    return out


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
