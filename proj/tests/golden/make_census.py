"""Degree-formula census over the default sweep, computed independently of
the C++ library on the partition side.

Usage: python3 make_census.py [max_size] [max_dim] > degree_census.txt
"""
import sys
from math import comb


def compositions(n, m):
    if n == 0:
        yield (m,)
        return
    for v in range(m, -1, -1):
        for rest in compositions(n - 1, m - v):
            yield (v,) + rest


def partition(a):
    n = len(a) - 1
    lam = [0] + [sum(a[n - i + 1:]) for i in range(1, n + 1)] + [sum(a)]
    return lam


def spread_mset(a):
    n = len(a) - 1
    lam = partition(a)
    diffs = {i: lam[i + 1] - lam[i - 1] for i in range(1, n + 1)}
    s = max(diffs.values())
    # index i on the partition side is pair n - i on the composition side
    return s, sorted(n - i for i, d in diffs.items() if d == s)


def runs(indices):
    out = []
    for i in indices:
        if out and out[-1][-1] == i - 1:
            out[-1].append(i)
        else:
            out.append([i])
    return out


def omega(a, mset):
    removed = set()
    for run in runs(mset):
        # take every other pair starting at the left end of the run
        for i in run[::2]:
            removed.update((i, i + 1))
    return tuple(x for j, x in enumerate(a) if j not in removed)


def spread(a):
    if len(a) == 0:
        return 0
    if len(a) == 1:
        return a[0]
    return spread_mset(a)[0]


def signature(a):
    n = len(a) - 1
    if n < 0:
        return ()
    if n <= 1:
        return (sum(a),)
    s, mset = spread_mset(a)
    r = sum((len(run) + 1) // 2 for run in runs(mset))
    w = omega(a, mset)
    return (0,) * (r - 1) + (s - spread(w),) + signature(w)


def keeps_spread(a):
    while len(a) >= 3 and sum(a) > 0:
        s, mset = spread_mset(a)
        w = omega(a, mset)
        if sum(w) > 0 and spread(w) == s:
            return True
        a = w
    return False


def fmt(v, open_, close):
    return open_ + ",".join(map(str, v)) + close


def main():
    max_size = int(sys.argv[1]) if len(sys.argv) > 1 else 200000
    max_dim = int(sys.argv[2]) if len(sys.argv) > 2 else 20
    print(f"# degree-formula census max_size={max_size} max_dim={max_dim}")
    for n in range(1, max_dim + 1):
        for m in range(1, max_dim + 1):
            if comb(m + n, m) > max_size:
                continue
            for a in compositions(n, m):
                _, mset = spread_mset(a)
                deg = sum((len(run) + 1) // 2 for run in runs(mset))
                d = signature(a)
                formula = 1 + min(j for j, x in enumerate(d) if x > 0)
                if formula != deg:
                    flag = "yes" if keeps_spread(a) else "no"
                    print(f"{fmt(a, '[', ']')} {fmt(d, '(', ')')} degree={deg} formula={formula} boundary={flag}")


if __name__ == "__main__":
    main()
