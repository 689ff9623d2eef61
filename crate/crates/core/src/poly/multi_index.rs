use std::cmp::Ordering;
use std::fmt;

/// Exponent vector `α = (α_1, …, α_n)` of the monomial `t^α`.
///
/// Ordered graded-lexicographically: by total degree first, then so that a
/// larger exponent of an earlier variable comes first (`t1 < t2 < t1^2 < t1 t2`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiIndex {
    exponents: Vec<u32>,
    degree: u32,
}

impl MultiIndex {
    pub fn new(exponents: Vec<u32>) -> Self {
        let degree = exponents.iter().sum();
        Self { exponents, degree }
    }

    pub fn zero(nvars: usize) -> Self {
        Self::new(vec![0; nvars])
    }

    /// The index of `t_j` (0-based `j`).
    pub fn unit(nvars: usize, j: usize) -> Self {
        let mut e = vec![0; nvars];
        e[j] = 1;
        Self::new(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn nvars(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.degree == 0
    }

    /// Componentwise sum, the exponent of `t^α t^β`.
    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        debug_assert_eq!(self.nvars(), other.nvars());
        MultiIndex::new(
            self.exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// `r_j(α)`: lower the `j`-th exponent (0-based) by one; `None` if it is zero.
    pub fn lower(&self, j: usize) -> Option<MultiIndex> {
        if self.exponents[j] == 0 {
            return None;
        }
        let mut e = self.exponents.clone();
        e[j] -= 1;
        Some(MultiIndex::new(e))
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| other.exponents.cmp(&self.exponents))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Prints the monomial, e.g. `t1^2*t3`; the empty monomial prints as "".
impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "t{}", j + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_order() {
        let mut v = [
            MultiIndex::new(vec![0, 2]),
            MultiIndex::new(vec![1, 0]),
            MultiIndex::new(vec![1, 1]),
            MultiIndex::new(vec![0, 0]),
            MultiIndex::new(vec![2, 0]),
            MultiIndex::new(vec![0, 1]),
        ];
        v.sort();
        let shown: Vec<String> = v.iter().map(|m| m.to_string()).collect();
        assert_eq!(shown, ["", "t1", "t2", "t1^2", "t1*t2", "t2^2"]);
    }

    #[test]
    fn addition_and_lowering() {
        let a = MultiIndex::new(vec![1, 2]);
        let b = MultiIndex::new(vec![0, 3]);
        assert_eq!(a.add(&b), MultiIndex::new(vec![1, 5]));
        assert_eq!(a.lower(0), Some(MultiIndex::new(vec![0, 2])));
        assert_eq!(b.lower(0), None);
        assert_eq!(a.degree(), 3);
    }
}
