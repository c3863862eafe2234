import numpy as np

import pyharnack as ph


a = ph.random_matrix(ph.RandomSpec(4, 'gaussian', max_norm=0.95, seed=1))

with ph.Context(tol=1e-9):
    # H(A) against its closed forms
    print(ph.identity_residuals(a))

    # every bound on lambda_1(H) * lambda_3(H)
    report = ph.bound_report(a, (1, 3))
    for name, bound in sorted(report.upper_bounds.items()):
        print('%s  %.6g <= %.6g' % (name, report.lhs, bound))

    # one j-conjecture evaluation, then a short search
    print(ph.j_conjecture_slack(a).slacks)
    result = ph.search(ph.SearchConfig(3, trials=200, seed=7, descent_steps=50))
    print(result.best.min_slack, result.violation)

# Cayley transform of a contraction and of a Hermitian pair
print(ph.cayley_bounds(a, (1, 2)).verdict)
h = np.diag([0.5, -0.3, 0.1, 2.0])
print(ph.fan_hoffman_check(h, h.T + 0.1).holds)
