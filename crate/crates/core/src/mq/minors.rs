use std::cell::RefCell;
use std::collections::HashMap;

use itertools::Itertools;
use num_traits::Zero;

use super::element::{check_index, normal_form, MqElement};
use crate::error::{Error, Result};
use crate::scalars::Scalar;

fn inversions(p: &[usize]) -> usize {
    (0..p.len()).flat_map(|a| (a + 1..p.len()).map(move |b| (a, b))).filter(|&(a, b)| p[a] > p[b]).count()
}

/// The quantum minor `[I|J]`: rows of `I` and columns of `J` taken in
/// increasing order, summed over column permutations weighted by
/// `(-q)^(inversions)`.
pub fn quantum_minor(rows: &[usize], cols: &[usize], n: usize) -> Result<MqElement> {
    if rows.len() != cols.len() {
        return Err(Error::SizeMismatch { expected: rows.len(), found: cols.len() });
    }
    for &i in rows.iter().chain(cols) {
        check_index(n, i)?;
    }
    let rows: Vec<usize> = rows.iter().copied().sorted().collect();
    let cols: Vec<usize> = cols.iter().copied().sorted().collect();
    let t = rows.len();
    let minus_q = -Scalar::q();
    let mut out = MqElement::zero(n);
    for perm in (0..t).permutations(t) {
        let word: Vec<(usize, usize)> = (0..t).map(|a| (rows[a], cols[perm[a]])).collect();
        let sign = minus_q.pow(inversions(&perm) as i32)?;
        out = &out + &normal_form(n, &word, &sign)?;
    }
    Ok(out)
}

thread_local! {
    static DET_POWERS: RefCell<HashMap<(usize, usize), MqElement>> = RefCell::new(HashMap::new());
}

/// The quantum determinant of the N x N quantum matrix.
pub fn det_q(n: usize) -> MqElement {
    det_q_pow(n, 1)
}

/// `det_q^k`, memoized per thread.
pub fn det_q_pow(n: usize, k: usize) -> MqElement {
    if k == 0 {
        return MqElement::one(n);
    }
    if let Some(hit) = DET_POWERS.with(|c| c.borrow().get(&(n, k)).cloned()) {
        return hit;
    }
    let all: Vec<usize> = (1..=n).collect();
    let value = if k == 1 {
        quantum_minor(&all, &all, n).expect("full minor is always defined")
    } else {
        &det_q_pow(n, k - 1) * &det_q_pow(n, 1)
    };
    DET_POWERS.with(|c| c.borrow_mut().insert((n, k), value.clone()));
    value
}

fn principal_sum(i: usize, n: usize, weight: impl Fn(&[usize]) -> Scalar) -> Result<MqElement> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange(format!("{} not in 1..={}", i, n)));
    }
    let mut out = MqElement::zero(n);
    for subset in (1..=n).combinations(i) {
        let w = weight(&subset);
        if w.is_zero() {
            continue;
        }
        out.add_scaled(&w, &quantum_minor(&subset, &subset, n)?);
    }
    Ok(out)
}

/// Sum of the principal `i x i` quantum minors; the basic alpha-coinvariants.
pub fn sigma(i: usize, n: usize) -> Result<MqElement> {
    principal_sum(i, n, |_| Scalar::from_int(1))
}

/// `sum_I q^(-2 w(I)) [I|I]` over `|I| = i`, with `w(I)` the sum of the
/// elements of `I`; the basic beta-coinvariants.
pub fn tau(i: usize, n: usize) -> Result<MqElement> {
    principal_sum(i, n, |subset| {
        let w: usize = subset.iter().sum();
        Scalar::q_pow(-2 * w as i32)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_mq;

    #[test]
    fn two_by_two_determinant() {
        assert_eq!(det_q(2), parse_mq("x11*x22 - q*x12*x21", 2).unwrap());
    }

    #[test]
    fn one_by_one_minor() {
        for n in 1..=3 {
            assert_eq!(quantum_minor(&[1], &[1], n).unwrap(), MqElement::generator(n, 1, 1).unwrap());
        }
    }

    #[test]
    fn non_principal_minor_matches_permutation_sum() {
        // identity permutation plus one transposition weighted by -q
        let expected = parse_mq("x11*x23 - q*x13*x21", 3).unwrap();
        assert_eq!(quantum_minor(&[1, 2], &[1, 3], 3).unwrap(), expected);
    }

    #[test]
    fn mismatched_index_sets() {
        assert!(quantum_minor(&[1, 2], &[1], 3).is_err());
        assert!(quantum_minor(&[1, 4], &[1, 2], 3).is_err());
    }

    #[test]
    fn sigma_and_tau_examples() {
        assert_eq!(sigma(1, 3).unwrap(), parse_mq("x11 + x22 + x33", 3).unwrap());
        assert_eq!(tau(1, 2).unwrap(), parse_mq("q^-2*x11 + q^-4*x22", 2).unwrap());
        assert_eq!(tau(2, 2).unwrap(), parse_mq("q^-6*(x11*x22 - q*x12*x21)", 2).unwrap());
        assert_eq!(sigma(2, 2).unwrap(), det_q(2));
        assert!(tau(3, 2).is_err());
        assert!(sigma(0, 2).is_err());
    }

    #[test]
    fn determinant_has_n_factorial_terms() {
        assert_eq!(det_q(3).len(), 6);
    }
}
