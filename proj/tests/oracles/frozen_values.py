"""Independent sympy computations behind the frozen expected values in the
C++ unit tests. Run with `python3 tests/oracles/frozen_values.py`."""
import itertools
import sympy as sp


def E(n, a, b):
    m = sp.zeros(n, n)
    m[a, b] = 1
    return m


def comm(x, y):
    return x * y - y * x


def span_dim(mats):
    if not mats:
        return 0
    rows = [list(m.reshape(1, m.rows * m.cols)) for m in mats]
    return sp.Matrix(rows).rank()


def envelope(gens):
    n = gens[0].rows
    basis = [sp.eye(n)]
    frontier = [sp.eye(n)]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                c = g * w
                if span_dim(basis + [c]) > len(basis):
                    basis.append(c)
                    nxt.append(c)
        frontier = nxt
    return basis


def commutant_dim(gens):
    n = gens[0].rows
    syms = sp.symbols(f"c0:{n*n}")
    C = sp.Matrix(n, n, syms)
    eqs = []
    for g in gens:
        eqs += list(C * g - g * C)
    A, _ = sp.linear_eq_to_matrix(eqs, syms)
    return n * n - A.rank()


# realified su(2) action on C^2 = R^4 via (Re z, Im z, Re w, Im w)
fH = sp.Matrix([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])
fA = sp.Matrix([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]])
fB = sp.Matrix([[0, 0, 0, -1], [0, 0, 1, 0], [0, -1, 0, 0], [1, 0, 0, 0]])
I4 = sp.eye(4)
print("su2 brackets [H,A]=2B:", comm(fH, fA) == 2 * fB,
      "[H,B]=-2A:", comm(fH, fB) == -2 * fA,
      "[A,B]=2H:", comm(fA, fB) == 2 * fH)
print("det f(H) =", fH.det())
print("quaternionic envelope dim =", len(envelope([fH, fA, fB, I4])))
print("quaternionic commutant dim =", commutant_dim([fH, fA, fB, I4]))
J0 = sp.Matrix([[0, -1], [1, 0]])
print("rotation envelope dim =", len(envelope([sp.eye(2), J0])))
print("rotation commutant dim =", commutant_dim([sp.eye(2), J0]))
# gl(2) acting on first column, basis (E11,E12,E21,I)
def gl_first_cols(n, r):
    """f(E_ab) acting on V = first r columns, V basis E_cd (d<r) row-major."""
    vb = [(c, d) for c in range(n) for d in range(r)]
    idx = {p: i for i, p in enumerate(vb)}
    mats = {}
    for a in range(n):
        for b in range(n):
            m = sp.zeros(len(vb), len(vb))
            for (c, d) in vb:
                if b == c:
                    m[idx[(a, d)], idx[(c, d)]] += 1
            mats[(a, b)] = m
    return mats
g2 = gl_first_cols(2, 1)
print("gl(2) column rep commutant dim =", commutant_dim(list(g2.values())))

# Heisenberg raw curved Lambda: L(X)=E32, L(Y)=E13, L(Z)=0, k=0, q=id
LX, LY, LZ = E(3, 2, 1), E(3, 0, 2), sp.zeros(3, 3)
Lam = [LX, LY, LZ]
# brackets: [X,Y]=Z
br = {(0, 1): (1, 2), (1, 0): (-1, 2)}
def heis_bracket(i, j):
    v = sp.zeros(3, 1)
    if (i, j) in br:
        s, k = br[(i, j)]
        v[k] = s
    return v
def lam_of(v):
    return sum((v[i] * Lam[i] for i in range(3)), sp.zeros(3, 3))
R = {(a, b): comm(Lam[a], Lam[b]) - lam_of(heis_bracket(a, b)) for a in range(3) for b in range(3)}
T = {(a, b): Lam[a] * sp.eye(3)[:, b] - Lam[b] * sp.eye(3)[:, a] - heis_bracket(a, b) for a in range(3) for b in range(3)}
print("heis curved R(e1,e2) =", R[(0, 1)].tolist())
print("heis curved T(e2,e3) =", list(T[(1, 2)]))
Ric = sp.Matrix(3, 3, lambda w, z: sum((R[(i, w)] * sp.eye(3)[:, z])[i] for i in range(3)))
print("heis curved Ricci =", Ric.tolist())
print("heis zero-Lambda T(e1,e2) =", list(-heis_bracket(0, 1)))


def tensors(Lams, brk, dim):
    n = dim
    e = sp.eye(n)
    def lo(v):
        return sum((v[i] * Lams[i] for i in range(n)), sp.zeros(n, n))
    R = {(a, b): comm(Lams[a], Lams[b]) - lo(brk(a, b)) for a in range(n) for b in range(n)}
    T = {(a, b): Lams[a] * e[:, b] - Lams[b] * e[:, a] - brk(a, b) for a in range(n) for b in range(n)}
    Ric = sp.Matrix(n, n, lambda w, z: sum((R[(i, w)] * e[:, z])[i] for i in range(n)))
    weyl = all(sp.simplify(R[(u, w)] * e[:, z] - (Ric[w, z] * e[:, u] - Ric[u, z] * e[:, w]) / (n - 1)) == sp.zeros(n, 1)
               for u in range(n) for w in range(n) for z in range(n))
    def cod(x, y, z):
        L = Lams[x]
        return -(((L * e[:, y]).T * Ric * e[:, z])[0]) - ((e[:, y].T * Ric * (L * e[:, z]))[0])
    codazzi = all(cod(x, y, z) == cod(y, x, z) for x in range(n) for y in range(n) for z in range(n))
    tors0 = all(T[k] == sp.zeros(n, 1) for k in T)
    return R, T, Ric, weyl, codazzi, tors0

# 2D abelian, k=0, q=id: prescribe Ric = I, back-solve torsion-free Lambda
a, b, c, d, x, y = sp.symbols("a b c d x y")
L1 = sp.Matrix([[a, b], [c, d]])
L2 = sp.Matrix([[b, x], [d, y]])
target = sp.Matrix([[0, 1], [-1, 0]])  # R(e1,e2) forced by Ric = I
sols = sp.solve(list(comm(L1, L2) - target), [a, b, c, d, x, y], dict=True)
print("2D back-solve families:", sols[:3])
L1n = sp.Matrix([[0, 0], [-1, 0]])
L2n = sp.Matrix([[0, 1], [0, 0]])
# check torsion-free: L1 e2 == L2 e1
print("2D candidate torsion-free:", L1n[:, 1] == L2n[:, 0], "comm =", comm(L1n, L2n).tolist())
R2, T2, Ric2, weyl2, cod2, t02 = tensors([L1n, L2n], lambda i, j: sp.zeros(2, 1), 2)
print("2D Ric =", Ric2.tolist(), "weyl", weyl2, "codazzi", cod2, "torsion0", t02)
R2b, _, Ric2b, weyl2b, cod2b, _ = tensors([2 * L1n, 2 * L2n], lambda i, j: sp.zeros(2, 1), 2)
print("2D doubled Ric =", Ric2b.tolist(), "weyl", weyl2b, "codazzi", cod2b)

# su(2) with Lambda = 1/2 ad, k=0, q=id; basis H,A,B with [H,A]=2B,[H,B]=-2A,[A,B]=2H
def su2_br(i, j):
    tab = {(0, 1): (2, 2), (0, 2): (-2, 1), (1, 2): (2, 0)}
    v = sp.zeros(3, 1)
    if (i, j) in tab:
        s, k = tab[(i, j)]; v[k] = s
    elif (j, i) in tab:
        s, k = tab[(j, i)]; v[k] = -s
    return v
ad = [sp.Matrix.hstack(*[su2_br(i, j) for j in range(3)]) for i in range(3)]
for name, scale in (("zero", 0), ("ad", 1), ("half_ad", sp.Rational(1, 2))):
    Rs, Ts, Rics, ws, cs, t0 = tensors([scale * m for m in ad], su2_br, 3)
    flat = t0 and all(Rs[k] == sp.zeros(3, 3) for k in Rs)
    print(f"su2 {name}: flat={flat} torsion0={t0} Ric={Rics.tolist()} weyl={ws} codazzi={cs}")

# factor check
X = sp.symbols("X")
print("factor x^3-x^2+x-1:", sp.factor_list(X**3 - X**2 + X - 1))

# 2D back-solve with Ric = I: c=0, d=1, y=0 member of the family above
L1s = sp.Matrix([[2, 0], [0, 1]])
L2s = sp.Matrix([[0, 1], [1, 0]])
_, _, RicS, wS, cS, tS = tensors([L1s, L2s], lambda i, j: sp.zeros(2, 1), 2)
print("2D Ric=I back-solve: Ric", RicS.tolist(), "weyl", wS, "codazzi", cS, "torsion0", tS)

# 3D abelian torsion-free with symmetric Christoffel symbols: deterministic
# small examples used as negative controls for Weyl and Codazzi.
def abelian3(gamma):
    # gamma[k][i][j] symmetric in i,j; Lambda_i has (k,j) entry gamma[k][i][j]
    return [sp.Matrix(3, 3, lambda k, j: gamma[k][i][j]) for i in range(3)]
g = [[[0] * 3 for _ in range(3)] for _ in range(3)]
g[0][1][1] = 1      # Lambda(e2) e2 = e1
g[1][2][2] = 1      # Lambda(e3) e3 = e2
Ls = abelian3(g)
R3, T3, Ric3, w3, c3, t3 = tensors(Ls, lambda i, j: sp.zeros(3, 1), 3)
print("3D gamma example: Lambda", [m.tolist() for m in Ls])
print("   torsion0", t3, "Ric", Ric3.tolist(), "sym", Ric3 == Ric3.T, "weyl", w3, "codazzi", c3)

# 2D search for a torsion-free, symmetric-Ricci connection violating Codazzi
found = None
for a_, b_, c_, d_, x_, y_ in itertools.product((-1, 0, 1), repeat=6):
    L1c = sp.Matrix([[a_, b_], [c_, d_]])
    L2c = sp.Matrix([[b_, x_], [d_, y_]])
    _, _, Ricc, wc, cc, tc = tensors([L1c, L2c], lambda i, j: sp.zeros(2, 1), 2)
    if tc and Ricc == Ricc.T and not cc:
        found = (L1c, L2c, Ricc)
        break
print("2D Codazzi violation in {-1,0,1}^6:", found)

# 3D torsion-free, symmetric nonzero Ricci, Codazzi violated (found by search)
Lc = [E(3, 2, 0), -E(3, 0, 1), E(3, 0, 2)]
_, _, RicC, wC, cC, tC = tensors(Lc, lambda i, j: sp.zeros(3, 1), 3)
print("3D Codazzi negative: torsion0", tC, "Ric", RicC.tolist(), "weyl", wC, "codazzi", cC)
