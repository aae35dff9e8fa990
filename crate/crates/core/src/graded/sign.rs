use super::Deg;
use crate::{Error, Result};

/// `(-1)^n` as ±1.
pub fn parity_sign(n: i64) -> i32 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Sign of rearranging `x_0 ⊗ … ⊗ x_{n−1}` into `x_{perm[0]} ⊗ … ⊗ x_{perm[n−1]}`.
///
/// Accumulated by bubble-sorting adjacent transpositions; each swap of `a`
/// past `b` contributes `(−1)^{|a||b|}`.
pub fn koszul_sign(perm: &[usize], degs: &[Deg]) -> Result<i32> {
    if perm.len() != degs.len() {
        return Err(Error::LengthMismatch { expected: degs.len(), got: perm.len() });
    }
    let mut seen = vec![false; perm.len()];
    for &p in perm {
        if p >= perm.len() || seen[p] {
            return Err(Error::Unsupported(format!("{perm:?} is not a permutation")));
        }
        seen[p] = true;
    }
    let mut arr = perm.to_vec();
    let mut sign = 1;
    for i in 0..arr.len() {
        for j in 0..arr.len() - 1 - i {
            if arr[j] > arr[j + 1] {
                if degs[arr[j]].is_odd() && degs[arr[j + 1]].is_odd() {
                    sign = -sign;
                }
                arr.swap(j, j + 1);
            }
        }
    }
    Ok(sign)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn basic_cases() {
        let odd = [Deg(1), Deg(3)];
        assert_eq!(koszul_sign(&[0, 1], &odd).unwrap(), 1);
        assert_eq!(koszul_sign(&[1, 0], &odd).unwrap(), -1);
        assert_eq!(koszul_sign(&[1, 0], &[Deg(1), Deg(2)]).unwrap(), 1);
        assert!(matches!(koszul_sign(&[0], &odd), Err(Error::LengthMismatch { .. })));
    }

    fn perm_strategy(n: usize) -> impl Strategy<Value = Vec<usize>> {
        Just((0..n).collect::<Vec<_>>()).prop_shuffle()
    }

    proptest! {
        #[test]
        fn homomorphism(
            (degs, s, t) in (1usize..7).prop_flat_map(|n| (
                prop::collection::vec(-4i32..5, n),
                perm_strategy(n),
                perm_strategy(n),
            ))
        ) {
            let degs: Vec<Deg> = degs.into_iter().map(Deg).collect();
            // first apply t, then s to the rearranged list
            let composite: Vec<usize> = s.iter().map(|&i| t[i]).collect();
            let moved: Vec<Deg> = t.iter().map(|&i| degs[i]).collect();
            let lhs = koszul_sign(&composite, &degs).unwrap();
            let rhs = koszul_sign(&t, &degs).unwrap() * koszul_sign(&s, &moved).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
