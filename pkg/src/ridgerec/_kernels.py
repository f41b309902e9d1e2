"""Hot numeric loops in two flavors: numba-compiled and pure NumPy.

Every public function dispatches on :func:`ridgerec.backend.active_backend`.
The numba kernels are compiled without fastmath, so floating-point
evaluation keeps the written loop order; this is what makes the scalar and
full-matrix prediction paths bit-identical and training runs reproducible.
"""

import numpy as np

from . import backend

# --- pure-NumPy fallbacks ---------------------------------------------------


def _pairwise_sq_dists_np(a, b):
    out = np.empty((a.shape[0], b.shape[0]))
    for i in range(a.shape[0]):
        np.sum((b - a[i]) ** 2, axis=1, out=out[i])
    return out


def _row_dot_np(p, q, u, i):
    return float(np.dot(p[u], q[i]))


def _full_prediction_np(p, q, bu, bi, mu):
    # Entry by entry so every value is bit-identical to the scalar
    # prediction path; a single gemm would accumulate in a different order.
    out = np.empty((p.shape[0], q.shape[0]))
    for u in range(p.shape[0]):
        for i in range(q.shape[0]):
            out[u, i] = mu + bu[u] + bi[i] + float(np.dot(p[u], q[i]))
    return out


def _sgd_epoch_np(users, items, values, p, q, bu, bi, mu, lr, reg):
    for t in range(users.shape[0]):
        u = users[t]
        i = items[t]
        pred = mu + bu[u] + bi[i] + float(np.dot(p[u], q[i]))
        err = values[t] - pred
        pu = p[u].copy()
        qi = q[i].copy()
        bu[u] += lr * (err - reg * bu[u])
        bi[i] += lr * (err - reg * bi[i])
        p[u] += lr * (err * qi - reg * pu)
        q[i] += lr * (err * pu - reg * qi)


def _sse_np(users, items, values, p, q, bu, bi, mu):
    sse = 0.0
    for t in range(users.shape[0]):
        u = users[t]
        i = items[t]
        d = values[t] - (mu + bu[u] + bi[i] + float(np.dot(p[u], q[i])))
        sse += d * d
    return sse


# --- numba kernels ------------------------------------------------------------

if backend.HAVE_NUMBA:
    from numba import njit

    @njit(cache=True)
    def _pairwise_sq_dists_nb(a, b):
        n1, d = a.shape
        n2 = b.shape[0]
        out = np.empty((n1, n2))
        for i in range(n1):
            for j in range(n2):
                acc = 0.0
                for t in range(d):
                    diff = a[i, t] - b[j, t]
                    acc += diff * diff
                out[i, j] = acc
        return out

    @njit(cache=True)
    def _row_dot_nb(p, q, u, i):
        acc = 0.0
        for t in range(p.shape[1]):
            acc += p[u, t] * q[i, t]
        return acc

    @njit(cache=True)
    def _full_prediction_nb(p, q, bu, bi, mu):
        n_users, k = p.shape
        n_items = q.shape[0]
        out = np.empty((n_users, n_items))
        for u in range(n_users):
            for i in range(n_items):
                acc = 0.0
                for t in range(k):
                    acc += p[u, t] * q[i, t]
                out[u, i] = mu + bu[u] + bi[i] + acc
        return out

    @njit(cache=True)
    def _sgd_epoch_nb(users, items, values, p, q, bu, bi, mu, lr, reg):
        k = p.shape[1]
        pu = np.empty(k)
        qi = np.empty(k)
        for t in range(users.shape[0]):
            u = users[t]
            i = items[t]
            acc = 0.0
            for f in range(k):
                acc += p[u, f] * q[i, f]
            err = values[t] - (mu + bu[u] + bi[i] + acc)
            # snapshot the factor rows; the updates below must read the
            # pre-update values while the bias updates read current ones
            for f in range(k):
                pu[f] = p[u, f]
                qi[f] = q[i, f]
            bu[u] += lr * (err - reg * bu[u])
            bi[i] += lr * (err - reg * bi[i])
            for f in range(k):
                p[u, f] += lr * (err * qi[f] - reg * pu[f])
            for f in range(k):
                q[i, f] += lr * (err * pu[f] - reg * qi[f])

    @njit(cache=True)
    def _sse_nb(users, items, values, p, q, bu, bi, mu):
        k = p.shape[1]
        sse = 0.0
        for t in range(users.shape[0]):
            u = users[t]
            i = items[t]
            acc = 0.0
            for f in range(k):
                acc += p[u, f] * q[i, f]
            d = values[t] - (mu + bu[u] + bi[i] + acc)
            sse += d * d
        return sse


# --- dispatchers --------------------------------------------------------------


def pairwise_sq_dists(a, b):
    if backend.active_backend() == "numba":
        return _pairwise_sq_dists_nb(a, b)
    return _pairwise_sq_dists_np(a, b)


def row_dot(p, q, u, i):
    if backend.active_backend() == "numba":
        return _row_dot_nb(p, q, u, i)
    return _row_dot_np(p, q, u, i)


def full_prediction(p, q, bu, bi, mu):
    if backend.active_backend() == "numba":
        return _full_prediction_nb(p, q, bu, bi, mu)
    return _full_prediction_np(p, q, bu, bi, mu)


def sgd_epoch(users, items, values, p, q, bu, bi, mu, lr, reg):
    if backend.active_backend() == "numba":
        _sgd_epoch_nb(users, items, values, p, q, bu, bi, mu, lr, reg)
    else:
        _sgd_epoch_np(users, items, values, p, q, bu, bi, mu, lr, reg)


def sse(users, items, values, p, q, bu, bi, mu):
    if backend.active_backend() == "numba":
        return _sse_nb(users, items, values, p, q, bu, bi, mu)
    return _sse_np(users, items, values, p, q, bu, bi, mu)
