"""Independent derivation of the frozen values used in the C++ tests.

Reimplements splitmix64/PCG32/Box-Muller and the clustering metrics from
their definitions, cross-checks the metrics with scikit-learn when present,
and prints the numbers that are pinned in tests/*.cpp.
"""
import math

M64 = (1 << 64) - 1


def splitmix64(x):
    x = (x + 0x9E3779B97F4A7C15) & M64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & M64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & M64
    return x ^ (x >> 31)


class Pcg32:
    MUL = 6364136223846793005
    INC = 1442695040888963407

    def __init__(self, seed):
        self.state = 0
        self.next_u32()
        self.state = (self.state + splitmix64(seed)) & M64
        self.next_u32()

    def next_u32(self):
        old = self.state
        self.state = (old * self.MUL + self.INC) & M64
        xorshifted = (((old >> 18) ^ old) >> 27) & 0xFFFFFFFF
        rot = old >> 59
        return ((xorshifted >> rot) | (xorshifted << ((-rot) & 31))) & 0xFFFFFFFF

    def bounded(self, bound):
        threshold = ((1 << 32) - bound) % bound
        while True:
            r = self.next_u32()
            if r >= threshold:
                return r % bound

    def uniform(self):
        hi = self.next_u32() >> 5
        lo = self.next_u32() >> 6
        return (hi * 67108864 + lo) * 2.0 ** -53

    def normal_pair(self):
        u1 = 1.0 - self.uniform()
        u2 = self.uniform()
        r = math.sqrt(-2.0 * math.log(u1))
        a = 2.0 * math.pi * u2
        return r * math.cos(a), r * math.sin(a)


def random_indices(n, k, seed):
    idx = list(range(n))
    rng = Pcg32(seed)
    for i in range(k):
        j = i + rng.bounded(n - i)
        idx[i], idx[j] = idx[j], idx[i]
    return idx[:k]


def blobs(n, k, seed, std=1.0):
    rng = Pcg32(seed)
    centers = [(-10 + 20 * rng.uniform(), -10 + 20 * rng.uniform()) for _ in range(k)]
    pts, labels = [], []
    for i in range(n):
        c = i % k
        dx, dy = rng.normal_pair()
        pts.append((centers[c][0] + std * dx, centers[c][1] + std * dy))
        labels.append(c)
    return centers, pts, labels


def entropy(counts, total):
    return -sum(c / total * math.log(c / total) for c in counts if c > 0)


def hcv(truth, pred):
    n = len(truth)
    classes, clusters = sorted(set(truth)), sorted(set(pred))
    joint = {(c, k): sum(1 for t, p in zip(truth, pred) if t == c and p == k) for c in classes for k in clusters}
    nc = {c: truth.count(c) for c in classes}
    nk = {k: pred.count(k) for k in clusters}
    hc, hk = entropy(nc.values(), n), entropy(nk.values(), n)
    hck = -sum(v / n * math.log(v / nk[k]) for (c, k), v in joint.items() if v)
    hkc = -sum(v / n * math.log(v / nc[c]) for (c, k), v in joint.items() if v)
    h = 1.0 if hc == 0 else 1 - hck / hc
    cc = 1.0 if hk == 0 else 1 - hkc / hk
    v = 0.0 if h + cc == 0 else 2 * h * cc / (h + cc)
    return h, cc, v


def silhouette(pts, labels):
    total = 0.0
    for p, lp in enumerate(labels):
        same = [math.dist(pts[p], pts[q]) for q, lq in enumerate(labels) if q != p and lq == lp]
        if not same:
            continue
        a = sum(same) / len(same)
        b = min(
            sum(math.dist(pts[p], pts[q]) for q, lq in enumerate(labels) if lq == other)
            / labels.count(other)
            for other in set(labels) if other != lp)
        total += 0.0 if max(a, b) == 0 else (b - a) / max(a, b)
    return total / len(pts)


if __name__ == "__main__":
    pts = [(0, 0), (1, 0), (0, 1), (5, 5), (6, 5), (5, 6)]
    truth = [0, 0, 1, 1, 2, 2]
    pred = [0, 0, 0, 1, 1, 1]
    cents = {}
    for k in set(pred):
        members = [pts[i] for i in range(6) if pred[i] == k]
        cents[k] = (sum(m[0] for m in members) / len(members), sum(m[1] for m in members) / len(members))
    inertia = sum(math.dist(pts[i], cents[pred[i]]) ** 2 for i in range(6))
    print("fixture inertia %.17g" % inertia)
    print("fixture silhouette %.17g" % silhouette(pts, pred))
    print("fixture h c v %.17g %.17g %.17g" % hcv(truth, pred))
    try:
        from sklearn import metrics
        import numpy as np
        print("sklearn silhouette %.17g" % metrics.silhouette_score(np.array(pts, float), pred))
        print("sklearn h c v %.17g %.17g %.17g" % metrics.homogeneity_completeness_v_measure(truth, pred))
    except ImportError:
        pass

    rng = Pcg32(0)
    print("pcg32 seed0 first u32:", [rng.next_u32() for _ in range(4)])
    print("random_init n=250 k=3 seed=0:", random_indices(250, 3, 0))
    centers, bp, bl = blobs(250, 3, 0)
    print("blob centers %r" % [("%.17g" % c[0], "%.17g" % c[1]) for c in centers])
    for i in (0, 1, 2, 249):
        print("blob point %d (%.17g, %.17g) label %d" % (i, bp[i][0], bp[i][1], bl[i]))
