use crate::scalars::{QuadExt, Ring};

/// A complex number `re + i·im` with both parts in ℚ(√2, √3).
#[derive(Clone, PartialEq, Debug)]
pub struct Cx {
    pub re: QuadExt,
    pub im: QuadExt,
}

impl Cx {
    pub fn new(re: QuadExt, im: QuadExt) -> Self {
        Cx { re, im }
    }

    pub fn real(re: QuadExt) -> Self {
        Cx { re, im: QuadExt::int(0) }
    }

    pub fn i() -> Self {
        Cx { re: QuadExt::int(0), im: QuadExt::int(1) }
    }

    pub fn conj(&self) -> Self {
        Cx { re: self.re.clone(), im: -&self.im }
    }
}

impl Ring for Cx {
    fn zero() -> Self {
        Cx::real(QuadExt::int(0))
    }
    fn one() -> Self {
        Cx::real(QuadExt::int(1))
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        Cx::new(&self.re + &o.re, &self.im + &o.im)
    }
    fn sub(&self, o: &Self) -> Self {
        Cx::new(&self.re - &o.re, &self.im - &o.im)
    }
    fn mul(&self, o: &Self) -> Self {
        Cx::new(&(&self.re * &o.re) - &(&self.im * &o.im), &(&self.re * &o.im) + &(&self.im * &o.re))
    }
    fn neg(&self) -> Self {
        Cx::new(-&self.re, -&self.im)
    }
    fn from_i64(n: i64) -> Self {
        Cx::real(QuadExt::int(n))
    }
}

/// Square complex matrix with exact entries, used for the concrete realizations
/// of the classical algebras.
#[derive(Clone, PartialEq, Debug)]
pub struct CMat {
    n: usize,
    data: Vec<Cx>,
}

impl CMat {
    pub fn zero(n: usize) -> Self {
        CMat { n, data: vec![Cx::zero(); n * n] }
    }

    /// Elementary matrix `E_{ij}` with 1-based indices.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = CMat::zero(n);
        m.data[(i - 1) * n + (j - 1)] = Cx::one();
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Cx {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Cx) {
        self.data[i * self.n + j] = v;
    }

    pub fn entries(&self) -> &[Cx] {
        &self.data
    }

    pub fn add(&self, o: &CMat) -> CMat {
        CMat { n: self.n, data: self.data.iter().zip(&o.data).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, o: &CMat) -> CMat {
        CMat { n: self.n, data: self.data.iter().zip(&o.data).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, c: &Cx) -> CMat {
        CMat { n: self.n, data: self.data.iter().map(|a| if a.is_zero() { Cx::zero() } else { a.mul(c) }).collect() }
    }

    pub fn scale_real(&self, c: &QuadExt) -> CMat {
        self.scale(&Cx::real(c.clone()))
    }

    /// Multiplication by the imaginary unit.
    pub fn times_i(&self) -> CMat {
        self.scale(&Cx::i())
    }

    pub fn mul(&self, o: &CMat) -> CMat {
        let n = self.n;
        let mut out = CMat::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = o.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * n + j;
                    out.data[idx] = out.data[idx].add(&a.mul(b));
                }
            }
        }
        out
    }

    pub fn bracket(&self, o: &CMat) -> CMat {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn conj_transpose(&self) -> CMat {
        let n = self.n;
        let mut out = CMat::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    pub fn trace(&self) -> Cx {
        (0..self.n).fold(Cx::zero(), |acc, i| acc.add(self.get(i, i)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Cx::is_zero)
    }

    /// Real inner product `Re tr(X† Y)`.
    pub fn real_inner(&self, o: &CMat) -> QuadExt {
        self.data
            .iter()
            .zip(&o.data)
            .filter(|(a, b)| !a.is_zero() && !b.is_zero())
            .fold(QuadExt::int(0), |acc, (a, b)| &(&acc + &(&a.re * &b.re)) + &(&a.im * &b.im))
    }

    /// Linear combination `Σ cᵢ Mᵢ` with real coefficients.
    pub fn combination(n: usize, terms: &[(QuadExt, &CMat)]) -> CMat {
        terms.iter().filter(|(c, _)| !c.is_zero()).fold(CMat::zero(n), |acc, (c, m)| acc.add(&m.scale_real(c)))
    }
}
