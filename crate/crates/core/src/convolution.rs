//! Zeta and Möbius transforms over subset lattices, and subset convolution
//! by ranked transforms in `O(2^s s^2)` operations.

use thiserror::Error;

/// Largest supported universe.
pub const MAX_UNIVERSE: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConvolutionError {
    #[error("table of length {len} is not 2^{s}")]
    BadLength { s: usize, len: usize },
    #[error("universe of size {0} exceeds {MAX_UNIVERSE}")]
    TooLarge(usize),
    #[error("universe sizes differ: {0} and {1}")]
    UniverseMismatch(usize, usize),
    #[error("arithmetic overflow")]
    Overflow,
}

/// A function from subsets of an `s`-element universe to integers, indexed
/// by bitmask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFunction {
    s: usize,
    values: Vec<i64>,
}

impl SetFunction {
    pub fn new(s: usize, values: Vec<i64>) -> Result<Self, ConvolutionError> {
        if s > MAX_UNIVERSE {
            return Err(ConvolutionError::TooLarge(s));
        }
        if values.len() != 1 << s {
            return Err(ConvolutionError::BadLength { s, len: values.len() });
        }
        Ok(SetFunction { s, values })
    }

    pub fn zero(s: usize) -> Self {
        assert!(s <= MAX_UNIVERSE);
        SetFunction { s, values: vec![0; 1 << s] }
    }

    /// Indicator of the empty set, the identity of [`convolve`].
    pub fn delta(s: usize) -> Self {
        let mut f = Self::zero(s);
        f.values[0] = 1;
        f
    }

    pub fn universe(&self) -> usize {
        self.s
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn get(&self, mask: usize) -> i64 {
        self.values[mask]
    }

    pub fn set(&mut self, mask: usize, v: i64) {
        self.values[mask] = v;
    }
}

/// `zeta(f)(X) = Σ_{Y ⊆ X} f(Y)`.
pub fn zeta(f: &SetFunction) -> Result<SetFunction, ConvolutionError> {
    let mut v = f.values.clone();
    zeta_in_place(&mut v, f.s)?;
    Ok(SetFunction { s: f.s, values: v })
}

/// Inverse of [`zeta`].
pub fn mobius(f: &SetFunction) -> Result<SetFunction, ConvolutionError> {
    let mut v = f.values.clone();
    mobius_in_place(&mut v, f.s)?;
    Ok(SetFunction { s: f.s, values: v })
}

/// Subset convolution `(f ⋆ g)(X) = Σ_{Y ⊆ X} f(Y) g(X ∖ Y)`.
pub fn convolve(f: &SetFunction, g: &SetFunction) -> Result<SetFunction, ConvolutionError> {
    if f.s != g.s {
        return Err(ConvolutionError::UniverseMismatch(f.s, g.s));
    }
    let s = f.s;
    let size = 1usize << s;
    let ranked = |h: &SetFunction| -> Result<Vec<Vec<i64>>, ConvolutionError> {
        let mut out = vec![vec![0i64; size]; s + 1];
        for (m, &v) in h.values.iter().enumerate() {
            out[m.count_ones() as usize][m] = v;
        }
        for layer in &mut out {
            zeta_in_place(layer, s)?;
        }
        Ok(out)
    };
    let fr = ranked(f)?;
    let gr = ranked(g)?;
    let mut result = vec![0i64; size];
    let mut h = vec![0i64; size];
    for r in 0..=s {
        for m in 0..size {
            let mut acc = 0i64;
            for i in 0..=r {
                let p = fr[i][m].checked_mul(gr[r - i][m]).ok_or(ConvolutionError::Overflow)?;
                acc = acc.checked_add(p).ok_or(ConvolutionError::Overflow)?;
            }
            h[m] = acc;
        }
        mobius_in_place(&mut h, s)?;
        for m in 0..size {
            if m.count_ones() as usize == r {
                result[m] = h[m];
            }
        }
    }
    Ok(SetFunction { s, values: result })
}

fn zeta_in_place(v: &mut [i64], s: usize) -> Result<(), ConvolutionError> {
    for b in 0..s {
        for m in 0..v.len() {
            if m >> b & 1 == 1 {
                v[m] = v[m].checked_add(v[m ^ 1 << b]).ok_or(ConvolutionError::Overflow)?;
            }
        }
    }
    Ok(())
}

fn mobius_in_place(v: &mut [i64], s: usize) -> Result<(), ConvolutionError> {
    for b in 0..s {
        for m in 0..v.len() {
            if m >> b & 1 == 1 {
                v[m] = v[m].checked_sub(v[m ^ 1 << b]).ok_or(ConvolutionError::Overflow)?;
            }
        }
    }
    Ok(())
}

/// Zeta transform modulo `2^32`. Exact whenever the true results of the
/// surrounding computation lie in `0..2^32`.
pub(crate) fn zeta_wrapping(v: &mut [u32]) {
    let mut half = 1;
    while half < v.len() {
        for block in v.chunks_exact_mut(2 * half) {
            let (lo, hi) = block.split_at_mut(half);
            for (h, l) in hi.iter_mut().zip(lo.iter()) {
                *h = h.wrapping_add(*l);
            }
        }
        half *= 2;
    }
}

/// Möbius transform modulo `2^32`.
pub(crate) fn mobius_wrapping(v: &mut [u32]) {
    let mut half = 1;
    while half < v.len() {
        for block in v.chunks_exact_mut(2 * half) {
            let (lo, hi) = block.split_at_mut(half);
            for (h, l) in hi.iter_mut().zip(lo.iter()) {
                *h = h.wrapping_sub(*l);
            }
        }
        half *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn naive(f: &SetFunction, g: &SetFunction) -> Vec<i64> {
        let size = 1usize << f.s;
        (0..size)
            .map(|x| {
                let mut acc = 0;
                let mut y = x;
                loop {
                    acc += f.values[y] * g.values[x & !y];
                    if y == 0 {
                        break;
                    }
                    y = (y - 1) & x;
                }
                acc
            })
            .collect()
    }

    #[test]
    fn delta_has_constant_zeta() {
        let z = zeta(&SetFunction::delta(3)).unwrap();
        assert!(z.values().iter().all(|&v| v == 1));
    }

    #[test]
    fn ones_count_subsets() {
        let one = SetFunction::new(2, vec![1; 4]).unwrap();
        assert_eq!(convolve(&one, &one).unwrap().values(), &[1, 2, 2, 4]);
    }

    #[test]
    fn delta_squared_is_delta() {
        let d = SetFunction::delta(4);
        assert_eq!(convolve(&d, &d).unwrap(), d);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(SetFunction::new(2, vec![0; 3]), Err(ConvolutionError::BadLength { s: 2, len: 3 }));
        let a = SetFunction::zero(1);
        let b = SetFunction::zero(2);
        assert_eq!(convolve(&a, &b), Err(ConvolutionError::UniverseMismatch(1, 2)));
        let big = SetFunction::new(1, vec![i64::MAX, i64::MAX]).unwrap();
        assert_eq!(zeta(&big), Err(ConvolutionError::Overflow));
        assert_eq!(convolve(&big, &big), Err(ConvolutionError::Overflow));
    }

    #[test]
    fn wrapping_transforms_invert() {
        let mut v: Vec<u32> = (0..64).map(|i| (i * 7 % 5) as u32).collect();
        let orig = v.clone();
        zeta_wrapping(&mut v);
        let f = SetFunction::new(6, orig.iter().map(|&x| x as i64).collect()).unwrap();
        assert_eq!(v.iter().map(|&x| x as i64).collect::<Vec<_>>(), zeta(&f).unwrap().values());
        mobius_wrapping(&mut v);
        assert_eq!(v, orig);
    }

    fn arb_pair() -> impl Strategy<Value = (SetFunction, SetFunction)> {
        (0usize..=8).prop_flat_map(|s| {
            let n = 1 << s;
            (prop::collection::vec(0i64..50, n), prop::collection::vec(0i64..50, n)).prop_map(move |(a, b)| {
                (SetFunction::new(s, a).unwrap(), SetFunction::new(s, b).unwrap())
            })
        })
    }

    proptest! {
        #[test]
        fn matches_naive((f, g) in arb_pair()) {
            let fast = convolve(&f, &g).unwrap();
            let slow = naive(&f, &g);
            prop_assert_eq!(fast.values(), slow.as_slice());
        }

        #[test]
        fn commutes((f, g) in arb_pair()) {
            prop_assert_eq!(convolve(&f, &g).unwrap(), convolve(&g, &f).unwrap());
        }

        #[test]
        fn mobius_inverts_zeta((f, _) in arb_pair()) {
            prop_assert_eq!(mobius(&zeta(&f).unwrap()).unwrap(), f);
        }
    }
}
