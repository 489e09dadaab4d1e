use super::Matroid;
use crate::error::{Error, Result};

/// `M | U`: the ground set shrinks to `U`, independence delegates to `M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Restriction<M> {
    inner: M,
    subset: Vec<usize>,
    member: Vec<bool>,
}

impl<M: Matroid> Restriction<M> {
    pub fn new(inner: M, subset: &[usize]) -> Result<Self> {
        inner.validate(subset)?;
        let mut member = vec![false; inner.universe()];
        for &e in subset {
            member[e] = true;
        }
        let mut subset = subset.to_vec();
        subset.sort_unstable();
        Ok(Restriction { inner, subset, member })
    }

    pub fn inner(&self) -> &M {
        &self.inner
    }

    pub fn subset(&self) -> &[usize] {
        &self.subset
    }
}

impl<M: Matroid> Matroid for Restriction<M> {
    fn universe(&self) -> usize {
        self.inner.universe()
    }

    fn contains(&self, e: usize) -> bool {
        e < self.member.len() && self.member[e]
    }

    fn independent(&self, set: &[usize]) -> bool {
        set.iter().all(|&e| self.member[e]) && self.inner.independent(set)
    }

    fn elements(&self) -> Vec<usize> {
        self.subset.clone()
    }
}

/// Independent sets of `M` of size at most `bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Truncation<M> {
    inner: M,
    bound: usize,
}

impl<M: Matroid> Truncation<M> {
    pub fn new(inner: M, bound: usize) -> Result<Self> {
        if bound == 0 {
            return Err(Error::InvalidParameter("truncation bound must be at least 1".into()));
        }
        Ok(Truncation { inner, bound })
    }

    pub fn inner(&self) -> &M {
        &self.inner
    }

    pub fn bound(&self) -> usize {
        self.bound
    }
}

impl<M: Matroid> Matroid for Truncation<M> {
    fn universe(&self) -> usize {
        self.inner.universe()
    }

    fn contains(&self, e: usize) -> bool {
        self.inner.contains(e)
    }

    fn independent(&self, set: &[usize]) -> bool {
        set.len() <= self.bound && self.inner.independent(set)
    }
}

/// Splits every element of `M` into parallel copies: copy `v` stands for
/// `image[v]`, and a set of copies is independent iff their images are
/// distinct and independent in `M`.
#[derive(Debug, Clone)]
pub struct LiftedMatroid<M> {
    inner: M,
    image: Vec<usize>,
}

impl<M: Matroid> LiftedMatroid<M> {
    pub fn new(inner: M, image: Vec<usize>) -> Result<Self> {
        if let Some(&e) = image.iter().find(|&&e| !inner.contains(e)) {
            return Err(Error::NotInGroundSet(e));
        }
        Ok(LiftedMatroid { inner, image })
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }
}

impl<M: Matroid> Matroid for LiftedMatroid<M> {
    fn universe(&self) -> usize {
        self.image.len()
    }

    fn independent(&self, set: &[usize]) -> bool {
        let mut images: Vec<usize> = set.iter().map(|&v| self.image[v]).collect();
        images.sort_unstable();
        if images.windows(2).any(|p| p[0] == p[1]) {
            return false;
        }
        self.inner.independent(&images)
    }
}
