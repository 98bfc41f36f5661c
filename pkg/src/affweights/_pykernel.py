"""Pure-Python kernels for the two hot loops.

``hub`` pairs a content vector with every simple coroot; ``dominant_reduce``
repeatedly reflects at the first negative hub entry until the weight is
dominant.  Arithmetic is on Python integers, so the results are exact for
inputs of any size; the compiled twin in ``_core`` matches this behaviour
bit for bit on inputs that fit in 64 bits.
"""


def hub(a_flat, lam, b):
    n = len(lam)
    out = []
    for i in range(n):
        base = i * n
        acc = 0
        for j in range(n):
            acc += a_flat[base + j] * b[j]
        out.append(lam[i] - acc)
    return tuple(out)


def dominant_reduce(a_flat, lam, b, want_word=False):
    n = len(lam)
    bb = list(b)
    theta = list(hub(a_flat, lam, bb))
    word = [] if want_word else None
    while True:
        i = -1
        for j in range(n):
            if theta[j] < 0:
                i = j
                break
        if i < 0:
            break
        t = theta[i]
        bb[i] += t
        # b[i] += t shifts the hub by -t times column i of the Cartan matrix
        for j in range(n):
            theta[j] -= a_flat[j * n + i] * t
        if want_word:
            word.append(i)
    return tuple(bb), (tuple(word) if want_word else None)
