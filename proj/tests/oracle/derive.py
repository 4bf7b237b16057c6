# Independent oracle for expected values frozen into the C++ tests.
# Uses mpmath only; no code shared with the library under test.
from mpmath import mp, mpf, catalan, nstr
from fractions import Fraction

mp.dps = 300

def cf_eval(a, b, depth):
    x = mpf(b(depth)) / a(depth)
    for n in range(depth - 1, 0, -1):
        x = mpf(b(n)) / (a(n) + x)
    return a(0) + x

def kappa_cf(k, c):
    a = lambda n: 3*n*n + (3 + 4*k)*n + 2*k + 1
    b = lambda n: -2*n*n*(n + 2*k)*(n + c)
    return a, b

def agree(x, y):
    d = abs(x - y)
    if d == 0:
        return mp.dps
    m = max(abs(x), abs(y))
    from mpmath import floor, log10
    return int(floor(log10(m / d)))

G = +catalan

print("Q00 =", nstr(cf_eval(*kappa_cf(0, 0), 2000), 30), " 1/(2G) =", nstr(1/(2*G), 30))
print("Q11 =", nstr(cf_eval(*kappa_cf(1, 1), 2000), 30), " 4/(2G+1) =", nstr(4/(2*G+1), 30))

# catalan cross-check: G from Q_{1,1} at depth 12000
q = cf_eval(*kappa_cf(1, 1), 12000)
g_rec = (4/q - 1)/2
print("G-agreement via Q11 depth 12000:", agree(G, g_rec))

# ij family i=2, j=2, mu=3 at depth 4000 -> -6
i, j, mu = 2, 2, 3
a = lambda n: j*(2*i - j + 2) + (4*i + 3)*n + 3*n*n
b = lambda n: -2*n*(n + j - 1)*(n + 2*i - j + 1)*(n + mu)
print("ij(2,2,3) depth4000 =", nstr(cf_eval(a, b, 4000), 25), "agree with -6:", agree(cf_eval(a,b,4000), mpf(-6)))

# estimate_converged_digits floor: kappa=0,c=0 depth 6000 vs 12000
e1 = cf_eval(*kappa_cf(0, 0), 6000)
e2 = cf_eval(*kappa_cf(0, 0), 12000)
print("agree(6000,12000) k0c0 =", agree(e1, e2))

# successive limit gaps
for k, c in [(0, 50), (1, 20), (1, 100), (2, 20), (2, 40), (2, 80)]:
    qa = cf_eval(*kappa_cf(k, c), 12000)
    qb = cf_eval(*kappa_cf(k, c-1), 12000)
    print(f"gap k={k} c={c}:", nstr(qa - qb - 2, 10))

# delta values
def delta(k, c, seedA, seedB):
    if c < 2:
        return Fraction(seedA)*c + Fraction(seedB)
    p = 8*c*c + (2 - 8*k)*c + 1 - 2*k
    q = -2*c*(2*c - 1)*(2*(c - k) - 1)**2
    return p*delta(k, c-1, seedA, seedB) + q*delta(k, c-2, seedA, seedB)

print("delta(0,2) =", delta(0, 2, 10, 1))
print("delta(1,1) =", delta(1, 1, -2, 1))
print("delta(2,3) =", delta(2, 3, 12, 1))
print("delta(3,2) via recursion =", delta(3, 2, 22, -31), "via seed: ", 22*2-31)

# Q_{0,0} depth 12000 vs 1/(2G): agreement digits (acceptance threshold sanity)
print("k0c0 depth12000 vs closed:", agree(e2, 1/(2*G)))
for k in range(7):
    v = cf_eval(*kappa_cf(k, 20), 12000)
    # closed form
    from math import factorial
    def dfact(n):
        r = 1
        while n > 1:
            r *= n; n -= 2
        return r
    seeds = {0:(10,1),1:(-2,1),2:(12,1),3:(22,-31),4:(-10448,1327),5:(150002,-10891),6:(-23021852,1167809)}
    sig = {0:(1,2),1:(2,2),2:(8,6),3:(432,270),4:(86400,47250),5:(4704000,2315250),6:(4572288000,2062887750)}
    c = 20
    sn, sd = sig[k]
    al = sn*factorial(2*c)
    ga = sd*dfact(2*c-1)**2
    d = delta(k, c-1, *seeds[k])
    if k == 0:
        be = -d
    else:
        P = 1
        for t in range(1, k+1):
            P *= (2*c - (2*t - 1))
        be = P*d
    closed = al/(be + ga*G)
    print(f"k={k} c=20 CF vs closed agreement:", agree(v, closed))
