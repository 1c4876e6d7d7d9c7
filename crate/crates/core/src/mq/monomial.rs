use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// An ordered PBW monomial `x11^e11 x12^e12 ... xNN^eNN` of O(M_q).
///
/// Generators are indexed row-major from zero: `x_ij` (1-based) has index
/// `(i-1)*N + (j-1)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    n: u8,
    exps: SmallVec<[u16; 9]>,
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial { n: n as u8, exps: SmallVec::from_elem(0, n * n) }
    }

    /// The generator `x_ij`, 1-based.
    pub fn generator(n: usize, i: usize, j: usize) -> Self {
        Monomial::one(n).times_gen(gen_index(n, i, j))
    }

    pub fn from_exponents(n: usize, exps: &[u16]) -> Self {
        assert_eq!(exps.len(), n * n, "exponent vector has wrong length");
        Monomial { n: n as u8, exps: SmallVec::from_slice(exps) }
    }

    pub fn size(&self) -> usize {
        self.n as usize
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    /// Exponent of `x_ij`, 1-based.
    pub fn exponent(&self, i: usize, j: usize) -> u16 {
        self.exps[gen_index(self.size(), i, j)]
    }

    pub fn degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Generator indices in order, with multiplicity.
    pub fn word(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .flat_map(|(g, &e)| std::iter::repeat_n(g, e as usize))
            .collect()
    }

    pub fn first_gen(&self) -> Option<usize> {
        self.exps.iter().position(|&e| e > 0)
    }

    pub fn last_gen(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e > 0)
    }

    /// Append a generator without reordering; callers ensure `g` is not
    /// smaller than [`Monomial::last_gen`] when they need a normal monomial.
    pub(crate) fn times_gen(&self, g: usize) -> Monomial {
        let mut m = self.clone();
        m.exps[g] += 1;
        m
    }

    pub(crate) fn without_gen(&self, g: usize) -> Monomial {
        let mut m = self.clone();
        debug_assert!(m.exps[g] > 0);
        m.exps[g] -= 1;
        m
    }

    /// Product of monomials as commuting variables (exponent addition).
    pub fn commutative_mul(&self, other: &Monomial) -> Monomial {
        let mut m = self.clone();
        for (a, b) in m.exps.iter_mut().zip(other.exps.iter()) {
            *a += b;
        }
        m
    }

    /// Row sums: `rowdeg[i]` is the total exponent of generators in row `i`.
    pub fn rowdeg(&self) -> Vec<i32> {
        let n = self.size();
        (0..n).map(|i| (0..n).map(|j| self.exps[i * n + j] as i32).sum()).collect()
    }

    pub fn coldeg(&self) -> Vec<i32> {
        let n = self.size();
        (0..n).map(|j| (0..n).map(|i| self.exps[i * n + j] as i32).sum()).collect()
    }

    /// True when only diagonal generators occur.
    pub fn is_diagonal(&self) -> bool {
        let n = self.size();
        self.exps.iter().enumerate().all(|(g, &e)| e == 0 || g / n == g % n)
    }

    /// Render with a custom name per generator index.
    pub(crate) fn fmt_with(&self, f: &mut fmt::Formatter<'_>, name: impl Fn(usize) -> String) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (g, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", name(g))?;
            if e > 1 {
                write!(f, "^{}", e)?;
            }
        }
        Ok(())
    }
}

pub(crate) fn gen_index(n: usize, i: usize, j: usize) -> usize {
    (i - 1) * n + (j - 1)
}

/// `(i, j)`, 1-based, of a generator index.
pub(crate) fn gen_pos(n: usize, g: usize) -> (usize, usize) {
    (g / n + 1, g % n + 1)
}

/// Degree first, then lexicographic comparison of the ordered words.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.degree().cmp(&other.degree()))
            .then_with(|| {
                // the word with the larger exponent at the first difference
                // has the smaller letter at that position
                for (a, b) in self.exps.iter().zip(other.exps.iter()) {
                    if a != b {
                        return b.cmp(a);
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.size();
        self.fmt_with(f, |g| {
            let (i, j) = gen_pos(n, g);
            format!("x{}{}", i, j)
        })
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// All ordered monomials of total degree at most `d`, sorted by degree and
/// then lexicographically.
pub fn monomial_basis(n: usize, d: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    for deg in 0..=d {
        out.extend(monomials_of_degree(n, deg));
    }
    out
}

pub fn monomials_of_degree(n: usize, d: usize) -> Vec<Monomial> {
    fn rec(pos: usize, left: u16, cur: &mut Vec<u16>, n: usize, out: &mut Vec<Monomial>) {
        if pos + 1 == cur.len() {
            cur[pos] = left;
            out.push(Monomial::from_exponents(n, cur));
            return;
        }
        for e in (0..=left).rev() {
            cur[pos] = e;
            rec(pos + 1, left - e, cur, n, out);
        }
    }
    let mut out = Vec::new();
    let mut cur = vec![0u16; n * n];
    if n == 0 {
        return out;
    }
    rec(0, d as u16, &mut cur, n, &mut out);
    out.sort();
    out
}
