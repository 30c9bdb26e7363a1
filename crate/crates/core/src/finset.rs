//! The category of finite sets: objects are ordinals `[n] = {0,..,n-1}`,
//! arrows are total functions stored as lookup tables.
//!
//! Besides composition this module provides every finite colimit and limit
//! primitive the rest of the crate is built from. All of them return
//! canonical representatives so results can be compared bit for bit:
//!
//! * coproducts are left-offset concatenation,
//! * products pair `(i, j)` as `i * |B| + j` (row-major),
//! * quotients number their classes in order of least member,
//! * equalizers and pullbacks enumerate their elements in increasing order.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::union_find::UnionFind;

/// A function `[dom] -> [cod]`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawFinFn")]
pub struct FinFn {
    table: Vec<usize>,
    cod: usize,
}

#[derive(Deserialize)]
struct RawFinFn {
    table: Vec<usize>,
    cod: usize,
}

impl TryFrom<RawFinFn> for FinFn {
    type Error = Error;

    fn try_from(raw: RawFinFn) -> Result<Self> {
        FinFn::new(raw.table, raw.cod)
    }
}

impl FinFn {
    /// Checks that every entry lies in `[0, cod)`.
    pub fn new(table: Vec<usize>, cod: usize) -> Result<Self> {
        if let Some((position, &value)) = table.iter().enumerate().find(|(_, &v)| v >= cod) {
            return Err(Error::OutOfRange {
                position,
                value,
                cod,
            });
        }
        Ok(FinFn { table, cod })
    }

    pub(crate) fn from_parts(table: Vec<usize>, cod: usize) -> Self {
        debug_assert!(table.iter().all(|&v| v < cod), "{table:?} into [{cod}]");
        FinFn { table, cod }
    }

    pub fn identity(n: usize) -> Self {
        FinFn::from_parts((0..n).collect(), n)
    }

    /// The unique map out of the initial object.
    pub fn initial(cod: usize) -> Self {
        FinFn::from_parts(Vec::new(), cod)
    }

    /// The unique map into the one-element set.
    pub fn terminal(dom: usize) -> Self {
        FinFn::from_parts(vec![0; dom], 1)
    }

    /// The codiagonal `[n] + [n] -> [n]`.
    pub fn codiagonal(n: usize) -> Self {
        FinFn::from_parts((0..n).chain(0..n).collect(), n)
    }

    /// The diagonal `[n] -> [n] x [n]`.
    pub fn diagonal(n: usize) -> Self {
        FinFn::from_parts((0..n).map(|i| i * n + i).collect(), n * n)
    }

    /// The block swap `[a] + [b] -> [b] + [a]`.
    pub fn swap_sum(a: usize, b: usize) -> Self {
        let table = (0..a).map(|x| b + x).chain(0..b).collect();
        FinFn::from_parts(table, a + b)
    }

    /// The swap `[a] x [b] -> [b] x [a]`.
    pub fn swap_product(a: usize, b: usize) -> Self {
        let table = (0..a * b).map(|p| (p % b) * a + p / b).collect();
        FinFn::from_parts(table, a * b)
    }

    pub fn dom(&self) -> usize {
        self.table.len()
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn into_table(self) -> Vec<usize> {
        self.table
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    /// `self` followed by `g`.
    pub fn compose(&self, g: &FinFn) -> Result<FinFn> {
        if self.cod != g.dom() {
            return Err(Error::boundary("compose_fn", self.boundary(), g.boundary()));
        }
        let table = self.table.iter().map(|&x| g.table[x]).collect();
        Ok(FinFn::from_parts(table, g.cod))
    }

    /// The coproduct of arrows `self + g : A + B -> C + D`.
    pub fn sum(&self, g: &FinFn) -> FinFn {
        let table = self
            .table
            .iter()
            .copied()
            .chain(g.table.iter().map(|&y| self.cod + y))
            .collect();
        FinFn::from_parts(table, self.cod + g.cod)
    }

    /// The product of arrows `self x g : A x B -> C x D`.
    pub fn product(&self, g: &FinFn) -> FinFn {
        let mut table = Vec::with_capacity(self.dom() * g.dom());
        for &x in &self.table {
            for &y in &g.table {
                table.push(x * g.cod + y);
            }
        }
        FinFn::from_parts(table, self.cod * g.cod)
    }

    /// The copairing `[f, g] : A + B -> C` of two arrows into a common codomain.
    pub fn cotuple(&self, g: &FinFn) -> Result<FinFn> {
        if self.cod != g.cod {
            return Err(Error::boundary("cotuple", self.boundary(), g.boundary()));
        }
        let table = self.table.iter().chain(&g.table).copied().collect();
        Ok(FinFn::from_parts(table, self.cod))
    }

    /// The pairing `<f, g> : X -> A x B` of two arrows out of a common domain.
    pub fn tuple(&self, g: &FinFn) -> Result<FinFn> {
        if self.dom() != g.dom() {
            return Err(Error::boundary("tuple", self.boundary(), g.boundary()));
        }
        let table = self
            .table
            .iter()
            .zip(&g.table)
            .map(|(&a, &b)| a * g.cod + b)
            .collect();
        Ok(FinFn::from_parts(table, self.cod * g.cod))
    }

    pub fn is_identity(&self) -> bool {
        self.cod == self.dom() && self.table.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod];
        self.table.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.cod];
        for &v in &self.table {
            seen[v] = true;
        }
        seen.into_iter().all(|s| s)
    }

    /// The `[dom]->[cod]` boundary used in error messages.
    pub fn boundary(&self) -> String {
        format!("[{}]->[{}]", self.dom(), self.cod)
    }

    /// The map `sum_i A_i -> sum_j B_j` sending the `i`-th summand
    /// identically onto the `phi(i)`-th one. Requires `|A_i| = |B_phi(i)|`.
    pub fn block_map(src: &[usize], tgt: &[usize], phi: &[usize]) -> Result<FinFn> {
        check_index_map(src, tgt, phi)?;
        let offsets = offsets(tgt);
        let mut table = Vec::with_capacity(src.iter().sum());
        for (i, &size) in src.iter().enumerate() {
            let base = offsets[phi[i]];
            table.extend(base..base + size);
        }
        Ok(FinFn::from_parts(table, offsets[tgt.len()]))
    }

    /// The restriction `prod_j B_j -> prod_i A_i` sending a tuple `(b_j)` to
    /// `(b_phi(i))`, the limit-side counterpart of [`FinFn::block_map`].
    /// Tuples are encoded row-major.
    pub fn restriction(src: &[usize], tgt: &[usize], phi: &[usize]) -> Result<FinFn> {
        check_index_map(src, tgt, phi)?;
        let dom: usize = tgt.iter().product();
        let cod: usize = src.iter().product();
        let mut table = Vec::with_capacity(dom);
        let mut digits = vec![0usize; tgt.len()];
        for p in 0..dom {
            decode_row_major(p, tgt, &mut digits);
            let mut out = 0;
            for (i, &size) in src.iter().enumerate() {
                out = out * size + digits[phi[i]];
            }
            table.push(out);
        }
        Ok(FinFn::from_parts(table, cod))
    }
}

impl fmt::Display for FinFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.table.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]:[{}]->[{}]", self.dom(), self.cod)
    }
}

impl fmt::Debug for FinFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn check_index_map(src: &[usize], tgt: &[usize], phi: &[usize]) -> Result<()> {
    if phi.len() != src.len() {
        return Err(Error::boundary(
            "index map",
            format!("{} source summands", src.len()),
            format!("{} entries", phi.len()),
        ));
    }
    for (i, &j) in phi.iter().enumerate() {
        if j >= tgt.len() {
            return Err(Error::BadIndex {
                what: "summand",
                index: j,
                bound: tgt.len(),
            });
        }
        if src[i] != tgt[j] {
            return Err(Error::boundary(
                "index map",
                format!("summand {i} of size {}", src[i]),
                format!("summand {j} of size {}", tgt[j]),
            ));
        }
    }
    Ok(())
}

/// Prefix sums: `offsets(s)[k] = s[0] + .. + s[k-1]`, with one extra
/// trailing entry holding the total.
pub fn offsets(sizes: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(sizes.len() + 1);
    let mut acc = 0;
    out.push(0);
    for &s in sizes {
        acc += s;
        out.push(acc);
    }
    out
}

pub(crate) fn decode_row_major(mut p: usize, sizes: &[usize], digits: &mut [usize]) {
    for k in (0..sizes.len()).rev() {
        digits[k] = p % sizes[k];
        p /= sizes[k];
    }
}

/// A coproduct `A + B` with its injections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coproduct {
    pub size: usize,
    pub inj1: FinFn,
    pub inj2: FinFn,
}

pub fn coproduct(a: usize, b: usize) -> Coproduct {
    let size = a + b;
    Coproduct {
        size,
        inj1: FinFn::from_parts((0..a).collect(), size),
        inj2: FinFn::from_parts((a..size).collect(), size),
    }
}

/// A product `A x B` with its projections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Product {
    pub size: usize,
    pub proj1: FinFn,
    pub proj2: FinFn,
}

pub fn product(a: usize, b: usize) -> Product {
    let size = a * b;
    Product {
        size,
        proj1: FinFn::from_parts((0..size).map(|p| p / b).collect(), a),
        proj2: FinFn::from_parts((0..size).map(|p| p % b).collect(), b),
    }
}

/// The canonical quotient `q : B -> Q` coequalizing `f, g : A -> B`.
pub fn coequalizer(f: &FinFn, g: &FinFn) -> Result<FinFn> {
    if f.dom() != g.dom() || f.cod() != g.cod() {
        return Err(Error::boundary("coequalizer", f.boundary(), g.boundary()));
    }
    let mut uf = UnionFind::new(f.cod());
    for (&x, &y) in f.table.iter().zip(&g.table) {
        uf.union(x, y);
    }
    Ok(uf.quotient())
}

/// Pushout of `f : A -> B` and `g : A -> C`, returning the legs
/// `B -> P` and `C -> P`.
pub fn pushout(f: &FinFn, g: &FinFn) -> Result<(FinFn, FinFn)> {
    if f.dom() != g.dom() {
        return Err(Error::boundary("pushout", f.boundary(), g.boundary()));
    }
    let (b, c) = (f.cod(), g.cod());
    let mut uf = UnionFind::new(b + c);
    for (&x, &y) in f.table.iter().zip(&g.table) {
        uf.union(x, b + y);
    }
    let q = uf.quotient();
    let p = q.cod();
    let left = FinFn::from_parts(q.table[..b].to_vec(), p);
    let right = FinFn::from_parts(q.table[b..].to_vec(), p);
    Ok((left, right))
}

/// The inclusion of `{ a : f(a) = g(a) }`, enumerated in increasing order.
pub fn equalizer(f: &FinFn, g: &FinFn) -> Result<FinFn> {
    if f.dom() != g.dom() || f.cod() != g.cod() {
        return Err(Error::boundary("equalizer", f.boundary(), g.boundary()));
    }
    let table = (0..f.dom()).filter(|&a| f.table[a] == g.table[a]).collect();
    Ok(FinFn::from_parts(table, f.dom()))
}

/// Pullback of `f : B -> A` and `g : C -> A`, returning the projections
/// `P -> B` and `P -> C`. `P` is the subset of `B x C` where the maps
/// agree, enumerated in row-major order.
pub fn pullback(f: &FinFn, g: &FinFn) -> Result<(FinFn, FinFn)> {
    if f.cod() != g.cod() {
        return Err(Error::boundary("pullback", f.boundary(), g.boundary()));
    }
    // Bucket C by image so the cost is proportional to the output.
    let mut fibres: Vec<Vec<usize>> = vec![Vec::new(); f.cod()];
    for (c, &a) in g.table.iter().enumerate() {
        fibres[a].push(c);
    }
    let (mut pb, mut pc) = (Vec::new(), Vec::new());
    for (b, &a) in f.table.iter().enumerate() {
        for &c in &fibres[a] {
            pb.push(b);
            pc.push(c);
        }
    }
    Ok((
        FinFn::from_parts(pb, f.dom()),
        FinFn::from_parts(pc, g.dom()),
    ))
}
