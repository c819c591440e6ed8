//! The six families of knots in lens spaces whose exteriors contain a
//! once-punctured torus, with their surgery descriptions and attributes.
//!
//! Families I–V are cores of one component of a Whitehead link surgery
//! `W(α, β)`; family VI is the core of a Heegaard solid torus. The closed
//! forms live in an [`Atlas`], which is plain data so that a corrupted copy
//! can be fed through the same verification path.

mod table;
mod verify;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lensspace::{is_homeomorphic, LensSpace, Slope};
use crate::linkcalc::{builtin, h1, BuiltinLink, Coefficient, FramedLink};
use crate::ptbundle::{Generator, MappingWord};

pub use table::{FillingTable, FillingTableRow, TableMatch};
pub use verify::{verify, Check, CheckId, Status, VerificationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyId {
    I,
    II,
    III,
    IV,
    V,
    VI,
}

impl FamilyId {
    pub const ALL: [FamilyId; 6] = [FamilyId::I, FamilyId::II, FamilyId::III, FamilyId::IV, FamilyId::V, FamilyId::VI];

    /// Families I–III are torus knots for every `k`.
    pub fn is_torus_family(self) -> bool {
        matches!(self, FamilyId::I | FamilyId::II | FamilyId::III)
    }

    pub fn is_whitehead(self) -> bool {
        self != FamilyId::VI
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let id = match s.trim().to_ascii_uppercase().as_str() {
            "I" | "1" => FamilyId::I,
            "II" | "2" => FamilyId::II,
            "III" | "3" => FamilyId::III,
            "IV" | "4" => FamilyId::IV,
            "V" | "5" => FamilyId::V,
            "VI" | "6" => FamilyId::VI,
            _ => return Err(Error::Parse { what: "family id", input: s.to_string() }),
        };
        Ok(id)
    }
}

/// `a·k + b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Linear {
    pub a: i64,
    pub b: i64,
}

impl Linear {
    pub const fn new(a: i64, b: i64) -> Self {
        Linear { a, b }
    }

    pub const fn constant(b: i64) -> Self {
        Linear { a: 0, b }
    }

    pub fn at(&self, k: i64) -> i64 {
        self.a * k + self.b
    }
}

/// A value that either holds for every `k` or only at `k = ±1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ForK<T> {
    Always(T),
    Unit { minus_one: Option<T>, plus_one: Option<T> },
}

impl<T> ForK<T> {
    pub fn unit(minus_one: Option<T>, plus_one: Option<T>) -> Self {
        ForK::Unit { minus_one, plus_one }
    }

    pub fn at(&self, k: i64) -> Option<&T> {
        match self {
            ForK::Always(v) => Some(v),
            ForK::Unit { minus_one, .. } if k == -1 => minus_one.as_ref(),
            ForK::Unit { plus_one, .. } if k == 1 => plus_one.as_ref(),
            ForK::Unit { .. } => None,
        }
    }
}

/// Closed forms for one of the families I–V. The surgery is
/// `W(fixed, base + 1/k)` and the knot is the core of component `core`
/// (0-based).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyForms {
    pub lens_p: Linear,
    pub lens_q: Linear,
    pub fixed: i64,
    pub base: i64,
    pub core: usize,
    /// `s = |order(k)|`.
    pub order: Linear,
    /// `|grid_index(k)|`.
    pub grid_index: Linear,
    pub torus_type: ForK<(u32, u32)>,
    /// Monodromy `x^e y` of the exterior, where it fibers.
    pub monodromy_exponent: ForK<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Atlas {
    pub forms: BTreeMap<FamilyId, FamilyForms>,
}

impl Atlas {
    pub fn standard() -> Self {
        use FamilyId::*;
        let forms = [
            (
                I,
                FamilyForms {
                    lens_p: Linear::new(6, -1),
                    lens_q: Linear::new(2, -1),
                    fixed: -1,
                    base: -6,
                    core: 1,
                    order: Linear::new(6, -1),
                    grid_index: Linear::constant(2),
                    torus_type: ForK::Always((2, 3)),
                    monodromy_exponent: ForK::Always(1),
                },
            ),
            (
                II,
                FamilyForms {
                    lens_p: Linear::new(8, -2),
                    lens_q: Linear::new(4, 1),
                    fixed: -2,
                    base: -4,
                    core: 1,
                    order: Linear::new(4, -1),
                    grid_index: Linear::constant(2),
                    torus_type: ForK::Always((2, 4)),
                    monodromy_exponent: ForK::Always(2),
                },
            ),
            (
                III,
                FamilyForms {
                    lens_p: Linear::new(9, -3),
                    lens_q: Linear::new(3, -2),
                    fixed: -3,
                    base: -3,
                    core: 1,
                    order: Linear::new(3, -1),
                    grid_index: Linear::constant(3),
                    torus_type: ForK::Always((3, 3)),
                    monodromy_exponent: ForK::Always(3),
                },
            ),
            (
                IV,
                FamilyForms {
                    lens_p: Linear::new(9, -3),
                    lens_q: Linear::new(3, -2),
                    fixed: -3,
                    base: -3,
                    core: 0,
                    order: Linear::constant(3),
                    grid_index: Linear::new(3, -1),
                    torus_type: ForK::unit(None, Some((2, 4))),
                    monodromy_exponent: ForK::unit(Some(4), Some(2)),
                },
            ),
            (
                V,
                FamilyForms {
                    lens_p: Linear::new(8, -2),
                    lens_q: Linear::new(4, 1),
                    fixed: -2,
                    base: -4,
                    core: 0,
                    order: Linear::constant(2),
                    grid_index: Linear::new(4, -1),
                    torus_type: ForK::unit(None, Some((3, 3))),
                    monodromy_exponent: ForK::unit(Some(5), Some(3)),
                },
            ),
        ];
        Atlas { forms: forms.into_iter().collect() }
    }

    pub fn forms(&self, f: FamilyId) -> Result<&FamilyForms> {
        self.forms.get(&f).ok_or_else(|| Error::NoWhiteheadExterior(f.to_string()))
    }

    /// Instance of one of the families I–V at `k ≠ 0`.
    pub fn instantiate(&self, f: FamilyId, k: i64) -> Result<FamilyInstance> {
        if k == 0 {
            return Err(Error::ZeroParameter);
        }
        let forms = self.forms(f)?;
        let space = LensSpace::new(forms.lens_p.at(k), forms.lens_q.at(k))?;
        let varying = Slope::integer(forms.base).add(Slope::new(1, k)?);
        let surgery = builtin(BuiltinLink::Whitehead).filled(&[Slope::integer(forms.fixed), varying])?;
        if forms.core >= surgery.len() {
            return Err(Error::NoSuchComponent(forms.core));
        }
        let monodromy = forms
            .monodromy_exponent
            .at(k)
            .map(|&e| MappingWord::from_syllables([(Generator::X, e), (Generator::Y, 1)]));
        Ok(FamilyInstance {
            family: f,
            parameter: Parameter::K { k },
            space,
            surgery,
            core: forms.core,
            order_s: forms.order.at(k).abs(),
            fibered: monodromy.is_some(),
            monodromy,
            grid_index: forms.grid_index.at(k).abs(),
            torus_type: forms.torus_type.at(k).copied(),
        })
    }

    /// Every nonzero `k` in `ks` for I–V, and for VI every lens space `L(r,q)`
    /// in normal form with `2 ≤ r ≤ max |k|`, in canonical order (family,
    /// then parameter).
    pub fn parameters(&self, families: &[FamilyId], ks: RangeInclusive<i64>) -> Vec<(FamilyId, Parameter)> {
        let max_abs_k = if ks.is_empty() { 0 } else { ks.start().abs().max(ks.end().abs()) };
        let mut fams: Vec<FamilyId> = families.to_vec();
        fams.sort_unstable();
        fams.dedup();
        let mut out = Vec::new();
        for f in fams {
            if f == FamilyId::VI {
                let spaces: BTreeSet<LensSpace> = (2..=max_abs_k)
                    .flat_map(|r| (1..r).filter(move |q| q.gcd(&r) == 1).map(move |q| (r, q)))
                    .filter_map(|(r, q)| LensSpace::new(r, q).ok())
                    .collect();
                out.extend(spaces.into_iter().map(|l| (f, Parameter::Rq { r: l.p(), q: l.q() })));
            } else {
                out.extend(ks.clone().filter(|&k| k != 0).map(|k| (f, Parameter::K { k })));
            }
        }
        out
    }

    pub fn instantiate_parameter(&self, f: FamilyId, p: Parameter) -> Result<FamilyInstance> {
        match (f, p) {
            (FamilyId::VI, Parameter::Rq { r, q }) => instantiate_lens(r, q),
            (FamilyId::VI, Parameter::K { .. }) => Err(Error::Parse { what: "family VI parameter", input: "k".into() }),
            (_, Parameter::K { k }) => self.instantiate(f, k),
            (_, Parameter::Rq { .. }) => Err(Error::Parse { what: "family parameter", input: "r,q".into() }),
        }
    }

    /// Verify every instance of [`Atlas::parameters`] on a pool of `jobs`
    /// threads. The result does not depend on `jobs`.
    pub fn verify_range(
        &self,
        families: &[FamilyId],
        ks: RangeInclusive<i64>,
        jobs: usize,
    ) -> Result<Vec<VerificationReport>> {
        let params = self.parameters(families, ks);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .map_err(|e| Error::InvalidLink(format!("thread pool: {e}")))?;
        Ok(pool.install(|| {
            params
                .par_iter()
                .map(|&(f, p)| match self.instantiate_parameter(f, p) {
                    Ok(inst) => verify(&inst),
                    Err(e) => VerificationReport::instantiation_failure(f, p, &e),
                })
                .collect()
        }))
    }
}

impl Default for Atlas {
    fn default() -> Self {
        Self::standard()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Parameter {
    K { k: i64 },
    Rq { r: i64, q: i64 },
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parameter::K { k } => write!(f, "k={k}"),
            Parameter::Rq { r, q } => write!(f, "r={r} q={q}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyInstance {
    pub family: FamilyId,
    pub parameter: Parameter,
    pub space: LensSpace,
    pub surgery: FramedLink,
    /// 0-based index of the component whose core is the knot.
    pub core: usize,
    /// Order of the knot in `H₁`; `0` when the class has infinite order.
    pub order_s: i64,
    pub fibered: bool,
    pub monodromy: Option<MappingWord>,
    pub grid_index: i64,
    pub torus_type: Option<(u32, u32)>,
}

impl FamilyInstance {
    /// The knot exterior: the surgery with the core component left unfilled.
    pub fn exterior(&self) -> Result<FramedLink> {
        let mut ext = self.surgery.clone();
        ext.set_coefficient(self.core, Coefficient::Unfilled)?;
        Ok(ext)
    }
}

impl fmt::Display for FamilyInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "family: {}", self.family)?;
        writeln!(f, "parameter: {}", self.parameter)?;
        writeln!(f, "space: {}", self.space)?;
        writeln!(f, "surgery: {}", self.surgery)?;
        writeln!(f, "core: component {}", self.core + 1)?;
        if self.order_s == 0 {
            writeln!(f, "order: s=0 (infinite)")?;
        } else {
            writeln!(f, "order: s={}", self.order_s)?;
        }
        writeln!(f, "fibered: {}", if self.fibered { "yes" } else { "no" })?;
        match &self.monodromy {
            Some(w) => {
                writeln!(f, "monodromy: {w}")?;
                writeln!(f, "class: {}", crate::ptbundle::classify(&crate::ptbundle::evaluate(w)))?;
            }
            None => writeln!(f, "monodromy: none")?,
        }
        writeln!(f, "grid index: {}", self.grid_index)?;
        match self.torus_type {
            Some((a, b)) => write!(f, "torus type: {{{a},{b}}}"),
            None => write!(f, "torus type: none"),
        }
    }
}

/// [`Atlas::instantiate`] on the standard atlas.
pub fn instantiate(f: FamilyId, k: i64) -> Result<FamilyInstance> {
    Atlas::standard().instantiate(f, k)
}

/// Family VI: the core of a Heegaard solid torus of `L(r,q)`, described as
/// `-r/q` surgery on the unknot. `r = 0` gives the `S¹ × S²` case, where the
/// core has infinite order and `s = 0`.
pub fn instantiate_lens(r: i64, q: i64) -> Result<FamilyInstance> {
    if r.abs() == 1 {
        return Err(Error::TrivialLensSpace(r));
    }
    let space = LensSpace::new(r, q)?;
    let surgery = builtin(BuiltinLink::Unknot).filled(&[Slope::new(-r, q)?])?;
    Ok(FamilyInstance {
        family: FamilyId::VI,
        parameter: Parameter::Rq { r, q },
        space,
        surgery,
        core: 0,
        order_s: r.abs(),
        fibered: false,
        monodromy: None,
        grid_index: 1,
        torus_type: None,
    })
}

/// All `(δa, δb)` with `2 ≤ δa ≤ δb` and `1/δa + 1/δb + 1/lcm = 1`.
///
/// `δa ≥ 4` makes the left side at most 3/4, and then `2/δb ≥ 1 - 1/δa ≥ 1/2`
/// bounds `δb ≤ 4`, so a search up to 4 is exhaustive; the loop goes a bit
/// further anyway.
pub fn torus_knot_types() -> BTreeSet<(u32, u32)> {
    let mut out = BTreeSet::new();
    for da in 2u32..=12 {
        for db in da..=12 {
            if solves_euler_equation(da, db) {
                out.insert((da, db));
            }
        }
    }
    out
}

/// `1/δa + 1/δb + 1/λ = 1` with `λ = lcm(δa, δb)`, in integers.
pub fn solves_euler_equation(da: u32, db: u32) -> bool {
    if da == 0 || db == 0 {
        return false;
    }
    let l = da.lcm(&db);
    l / da + l / db + 1 == l
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coincidence {
    pub first: (FamilyId, i64),
    pub second: (FamilyId, i64),
    pub space: LensSpace,
}

/// Homeomorphic pairs among the lens spaces of families I, II and III (from
/// different families) for `1 ≤ k, ℓ ≤ maxk`.
pub fn coincidence_scan(maxk: i64) -> Vec<Coincidence> {
    let atlas = Atlas::standard();
    let fams = [FamilyId::I, FamilyId::II, FamilyId::III];
    let spaces: Vec<Vec<Option<LensSpace>>> =
        fams.iter().map(|&f| (1..=maxk).map(|k| atlas.instantiate(f, k).ok().map(|i| i.space)).collect()).collect();
    let mut out = Vec::new();
    for a in 0..fams.len() {
        for b in a + 1..fams.len() {
            for (i, la) in spaces[a].iter().enumerate() {
                for (j, lb) in spaces[b].iter().enumerate() {
                    if let (Some(la), Some(lb)) = (la, lb) {
                        if is_homeomorphic(la, lb) {
                            out.push(Coincidence {
                                first: (fams[a], i as i64 + 1),
                                second: (fams[b], j as i64 + 1),
                                space: *la,
                            });
                        }
                    }
                }
            }
        }
    }
    out
}

/// The lens space obtained by filling the knot exterior of the fibered
/// member of family I–V (at `k = -1`) along the meridian of the knot, read
/// off from homology as `L(n,1)`.
pub fn gof_filling(f: FamilyId) -> Result<LensSpace> {
    if !f.is_whitehead() {
        return Err(Error::NoWhiteheadExterior(f.to_string()));
    }
    let inst = instantiate(f, -1)?;
    let mut filled = inst.surgery.clone();
    filled.set_coefficient(inst.core, Coefficient::Filled(Slope::INFINITY))?;
    let g = h1(&filled);
    if !g.is_cyclic() {
        return Err(Error::InvalidLink(format!("{filled} has non-cyclic homology {g}")));
    }
    let n = g.order().as_i64().unwrap_or(0);
    LensSpace::new(n, 1)
}
