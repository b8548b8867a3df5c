# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled monomial reducer; same interface as ``_reducer.Reducer``."""

from libc.stdlib cimport malloc, realloc, free
from cpython.tuple cimport PyTuple_New, PyTuple_SET_ITEM
from cpython.ref cimport Py_INCREF


ctypedef unsigned long long u64


cdef inline u64 _support(const int* a, int n) nogil:
    cdef u64 m = 0
    cdef int i
    for i in range(n):
        if a[i]:
            m |= (<u64>1) << (i & 63)
    return m


cdef class Reducer:
    cdef int nvars
    cdef int size
    cdef int cap
    cdef int* lbuf
    cdef int* tbuf
    cdef u64* masks
    cdef char* active
    cdef int* work
    cdef int* work2

    def __cinit__(self, int nvars):
        self.nvars = nvars
        self.size = 0
        self.cap = 16
        self.lbuf = <int*>malloc(self.cap * max(nvars, 1) * sizeof(int))
        self.tbuf = <int*>malloc(self.cap * max(nvars, 1) * sizeof(int))
        self.masks = <u64*>malloc(self.cap * sizeof(u64))
        self.active = <char*>malloc(self.cap * sizeof(char))
        self.work = <int*>malloc(max(nvars, 1) * sizeof(int))
        self.work2 = <int*>malloc(max(nvars, 1) * sizeof(int))
        if not (self.lbuf and self.tbuf and self.masks and self.active and self.work and self.work2):
            raise MemoryError()

    def __dealloc__(self):
        free(self.lbuf)
        free(self.tbuf)
        free(self.masks)
        free(self.active)
        free(self.work)
        free(self.work2)

    def __len__(self):
        return self.size

    @property
    def leads(self):
        return [self._row(self.lbuf, g) for g in range(self.size)]

    @property
    def trails(self):
        return [self._row(self.tbuf, g) for g in range(self.size)]

    cdef tuple _row(self, int* base, int g):
        return tuple(base[g * self.nvars + i] for i in range(self.nvars))

    cdef void _grow(self) except *:
        cdef int cap = self.cap * 2
        cdef int n = max(self.nvars, 1)
        cdef int* l = <int*>realloc(self.lbuf, cap * n * sizeof(int))
        if not l:
            raise MemoryError()
        self.lbuf = l
        cdef int* t = <int*>realloc(self.tbuf, cap * n * sizeof(int))
        if not t:
            raise MemoryError()
        self.tbuf = t
        cdef u64* mk = <u64*>realloc(self.masks, cap * sizeof(u64))
        if not mk:
            raise MemoryError()
        self.masks = mk
        cdef char* ac = <char*>realloc(self.active, cap * sizeof(char))
        if not ac:
            raise MemoryError()
        self.active = ac
        self.cap = cap

    cdef void _load(self, object m, int* dst) except *:
        if len(m) != self.nvars:
            raise ValueError("exponent tuple has the wrong length")
        cdef int i
        for i in range(self.nvars):
            dst[i] = m[i]

    def add(self, lead, trail):
        if self.size == self.cap:
            self._grow()
        cdef int g = self.size
        self._load(lead, self.lbuf + g * self.nvars)
        self._load(trail, self.tbuf + g * self.nvars)
        self.masks[g] = _support(self.lbuf + g * self.nvars, self.nvars)
        self.active[g] = 1
        self.size += 1
        return g

    def disable(self, int i):
        self.active[i] = 0

    def enable(self, int i):
        self.active[i] = 1

    cdef int _find(self, const int* m, int skip) nogil:
        cdef u64 mm = _support(m, self.nvars)
        cdef int g, i, n = self.nvars
        cdef const int* lead
        for g in range(self.size):
            if g == skip or not self.active[g] or (self.masks[g] & ~mm):
                continue
            lead = self.lbuf + g * n
            for i in range(n):
                if lead[i] > m[i]:
                    break
            else:
                return g
        return -1

    cdef tuple _to_tuple(self, const int* a):
        cdef int i
        cdef tuple out = PyTuple_New(self.nvars)
        cdef object v
        for i in range(self.nvars):
            v = a[i]
            Py_INCREF(v)
            PyTuple_SET_ITEM(out, i, v)
        return out

    def find_divisor(self, m, int skip=-1):
        self._load(m, self.work)
        return self._find(self.work, skip)

    cdef void _reduce_in_place(self, int* w) nogil:
        cdef int n = self.nvars
        cdef int g, i
        cdef const int* lead
        cdef const int* trail
        while True:
            g = self._find(w, -1)
            if g < 0:
                break
            lead = self.lbuf + g * n
            trail = self.tbuf + g * n
            for i in range(n):
                w[i] = w[i] - lead[i] + trail[i]

    def reduce(self, m):
        self._load(m, self.work)
        with nogil:
            self._reduce_in_place(self.work)
        return self._to_tuple(self.work)

    def reduce_spair(self, int i, int j):
        """Both sides of the S-binomial of elements ``i`` and ``j``, fully reduced."""
        cdef int n = self.nvars, k, c
        cdef const int* li = self.lbuf + i * n
        cdef const int* lj = self.lbuf + j * n
        cdef const int* ti = self.tbuf + i * n
        cdef const int* tj = self.tbuf + j * n
        cdef int* a = self.work
        cdef int* b = self.work2
        with nogil:
            for k in range(n):
                c = li[k] if li[k] > lj[k] else lj[k]
                a[k] = c - li[k] + ti[k]
                b[k] = c - lj[k] + tj[k]
            self._reduce_in_place(a)
            self._reduce_in_place(b)
        return self._to_tuple(a), self._to_tuple(b)

    def lcm_degree(self, int i, int j, grading=None):
        cdef int n = self.nvars, k, a, b, s = 0
        cdef const int* li = self.lbuf + i * n
        cdef const int* lj = self.lbuf + j * n
        for k in range(n):
            a = li[k]
            b = lj[k]
            s += (a if a > b else b) * (1 if grading is None else grading[k])
        return s

    def gm_update(self, int h, list basis, list pairs):
        """Gebauer-Moeller bookkeeping for a newly added element ``h``.

        Returns ``(partners, dropped, new_basis)``: the elements ``g`` for
        which ``(g, h)`` becomes a pair, the old pairs made redundant by
        ``h``, and the basis with elements whose lead ``h`` divides removed.
        """
        cdef int n = self.nvars, nb = len(basis), a, b, c, k, t, g1, g2
        cdef const int* lh = self.lbuf + h * n
        cdef const int* l1
        cdef const int* l2
        cdef int* lcms = <int*>malloc(max(nb, 1) * max(n, 1) * sizeof(int))
        cdef char* coprime = <char*>malloc(max(nb, 1))
        cdef char* inD = <char*>malloc(max(nb, 1))
        cdef bint ok, dominated, dl1, dl2
        cdef list partners = [], dropped = [], new_basis = []
        if not (lcms and coprime and inD):
            free(lcms); free(coprime); free(inD)
            raise MemoryError()
        try:
            for a in range(nb):
                l1 = self.lbuf + (<int>basis[a]) * n
                coprime[a] = 1
                inD[a] = 0
                for k in range(n):
                    lcms[a * n + k] = lh[k] if lh[k] > l1[k] else l1[k]
                    if lh[k] and l1[k]:
                        coprime[a] = 0
            for a in range(nb):
                if coprime[a]:
                    inD[a] = 1
                    continue
                dominated = False
                for b in range(nb):
                    if b == a or (b < a and not inD[b]):
                        continue
                    ok = True
                    for k in range(n):
                        if lcms[b * n + k] > lcms[a * n + k]:
                            ok = False
                            break
                    if ok:
                        dominated = True
                        break
                if not dominated:
                    inD[a] = 1
            for a in range(nb):
                if inD[a] and not coprime[a]:
                    partners.append(basis[a])
            for p in pairs:
                g1 = p[0]
                g2 = p[1]
                l1 = self.lbuf + g1 * n
                l2 = self.lbuf + g2 * n
                ok = True
                dl1 = False
                dl2 = False
                for k in range(n):
                    c = l1[k] if l1[k] > l2[k] else l2[k]
                    if lh[k] > c:
                        ok = False
                        break
                    t = l1[k] if l1[k] > lh[k] else lh[k]
                    if t != c:
                        dl1 = True
                    t = l2[k] if l2[k] > lh[k] else lh[k]
                    if t != c:
                        dl2 = True
                if ok and dl1 and dl2:
                    dropped.append(p)
            for a in range(nb):
                g1 = basis[a]
                l1 = self.lbuf + g1 * n
                ok = True
                for k in range(n):
                    if lh[k] > l1[k]:
                        ok = False
                        break
                if not ok:
                    new_basis.append(g1)
            new_basis.append(h)
        finally:
            free(lcms)
            free(coprime)
            free(inD)
        return partners, dropped, new_basis
