//! Cross-checks of a [`FamilyInstance`] against independent computations.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::{solves_euler_equation, FamilyId, FamilyInstance, FillingTable, Parameter};
use crate::error::Error;
use crate::gridknots::{find_torus_grid_witness, grid1_order};
use crate::lensspace::{is_homeomorphic, Slope};
use crate::linkcalc::{core_order, h1, AbelianGroup, Order};
use crate::ptbundle::{bundle_h1, classify, conjugacy_invariant, evaluate, Generator, MappingWord, NTClass};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckId {
    Instantiate,
    A,
    B,
    C,
    D,
    E,
    F,
}

impl CheckId {
    pub fn name(self) -> &'static str {
        match self {
            CheckId::Instantiate => "instantiate",
            CheckId::A => "homology",
            CheckId::B => "core order",
            CheckId::C => "fibration",
            CheckId::D => "grid",
            CheckId::E => "filling table",
            CheckId::F => "torus type",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckId::Instantiate => write!(f, "(-)"),
            id => write!(f, "({})", format!("{id:?}").to_lowercase()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skip => "skip",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: CheckId,
    pub status: Status,
    pub detail: String,
}

impl Check {
    fn new(id: CheckId, ok: bool, detail: String) -> Self {
        Check { id, status: if ok { Status::Pass } else { Status::Fail }, detail }
    }

    fn skip(id: CheckId, detail: &str) -> Self {
        Check { id, status: Status::Skip, detail: detail.to_string() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub family: FamilyId,
    pub parameter: Parameter,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub(crate) fn instantiation_failure(family: FamilyId, parameter: Parameter, e: &Error) -> Self {
        VerificationReport { family, parameter, checks: vec![Check::new(CheckId::Instantiate, false, e.to_string())] }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn check(&self, id: CheckId) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn status(&self, id: CheckId) -> Option<Status> {
        self.check(id).map(|c| c.status)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}: {}", self.family, self.parameter, if self.passed() { "pass" } else { "FAIL" })?;
        for c in &self.checks {
            write!(f, "\n  {} {}: {} {}", c.id, c.id.name(), c.status, c.detail)?;
        }
        Ok(())
    }
}

/// Run checks (a)–(f) on `inst`. Failures, including internal errors, are
/// report entries.
pub fn verify(inst: &FamilyInstance) -> VerificationReport {
    let checks = vec![
        check_homology(inst),
        check_core_order(inst),
        check_fibration(inst),
        check_grid(inst),
        check_table(inst),
        check_torus_type(inst),
    ];
    VerificationReport { family: inst.family, parameter: inst.parameter, checks }
}

fn check_homology(inst: &FamilyInstance) -> Check {
    let g = h1(&inst.surgery);
    let want = AbelianGroup::cyclic(inst.space.p() as u64);
    Check::new(CheckId::A, g == want, format!("H1 = {g}, expected {want}"))
}

fn check_core_order(inst: &FamilyInstance) -> Check {
    let want = if inst.order_s == 0 { Order::Infinite } else { Order::finite(inst.order_s) };
    match core_order(&inst.surgery, inst.core) {
        Ok(o) => Check::new(CheckId::B, o == want, format!("core order {o}, s={}", inst.order_s)),
        Err(e) => Check::new(CheckId::B, false, e.to_string()),
    }
}

/// A Whitehead exterior `W(c, ·)` with integer `c` fibers with monodromy
/// `x^(-c) y`; a non-integral `c` gives no once-punctured torus fiber. The
/// unknot exterior is a solid torus.
fn check_fibration(inst: &FamilyInstance) -> Check {
    let ext = match inst.exterior() {
        Ok(e) => e,
        Err(e) => return Check::new(CheckId::C, false, e.to_string()),
    };
    let ext_h1 = h1(&ext);
    if !inst.family.is_whitehead() {
        let ok = !inst.fibered && inst.monodromy.is_none() && ext_h1 == AbelianGroup::cyclic(0);
        return Check::new(CheckId::C, ok, format!("solid torus exterior, H1 = {ext_h1}"));
    }
    let Some(rest) = ext.coefficients().iter().find_map(|c| c.slope()) else {
        return Check::new(CheckId::C, false, "exterior has no filled component".into());
    };
    let expect_fibered = rest.den() == 1;
    if inst.fibered != expect_fibered || inst.monodromy.is_some() != inst.fibered {
        return Check::new(
            CheckId::C,
            false,
            format!(
                "fibered = {}, but W({rest}, ·) {} fiber",
                inst.fibered,
                if expect_fibered { "does" } else { "does not" }
            ),
        );
    }
    let Some(w) = &inst.monodromy else {
        return Check::new(CheckId::C, true, format!("W({rest}, ·) does not fiber"));
    };
    let bh1 = bundle_h1(w);
    let expected = MappingWord::from_syllables([(Generator::X, -rest.num()), (Generator::Y, 1)]);
    let same_class = conjugacy_invariant(&evaluate(w)) == conjugacy_invariant(&evaluate(&expected));
    Check::new(
        CheckId::C,
        bh1 == ext_h1 && same_class,
        format!("bundle H1({w}) = {bh1}, exterior H1 = {ext_h1}, W({rest}, ·) monodromy {expected}"),
    )
}

fn check_grid(inst: &FamilyInstance) -> Check {
    let r = inst.space.p();
    let order = grid1_order(r, inst.grid_index);
    if order != inst.order_s {
        return Check::new(
            CheckId::D,
            false,
            format!("grid index {} has order {order}, s={}", inst.grid_index, inst.order_s),
        );
    }
    let Some((da, db)) = inst.torus_type else {
        return Check::new(CheckId::D, true, format!("grid index {} has order {order}", inst.grid_index));
    };
    let n = inst.grid_index;
    let other = if n == da as i64 {
        db as i64
    } else if n == db as i64 {
        da as i64
    } else {
        return Check::new(CheckId::D, false, format!("grid index {n} is not in the torus type {{{da},{db}}}"));
    };
    match find_torus_grid_witness(r, inst.space.q(), n, other) {
        Ok(w) => Check::new(
            CheckId::D,
            true,
            format!("grid index {n} has order {order}; qdot={} sequence {:?}", w.qdot, w.sequence),
        ),
        Err(e) => Check::new(CheckId::D, false, format!("no torus knot grid witness: {e:?}")),
    }
}

fn check_table(inst: &FamilyInstance) -> Check {
    let slopes: Vec<Slope> = inst.surgery.coefficients().iter().filter_map(|c| c.slope()).collect();
    let (a, b) = match (inst.family.is_whitehead(), slopes.as_slice()) {
        (true, &[a, b]) => (a, b),
        (false, &[a]) => (a, Slope::INFINITY),
        _ => return Check::new(CheckId::E, false, format!("unexpected surgery {}", inst.surgery)),
    };
    match FillingTable::embedded().lookup(a, b) {
        Ok(Some(m)) => Check::new(
            CheckId::E,
            is_homeomorphic(&m.space, &inst.space),
            format!("W({a}, {b}) = {} (row {}), instance {}", m.space, m.row + 1, inst.space),
        ),
        Ok(None) => Check::new(CheckId::E, false, format!("W({a}, {b}) is not in the table")),
        Err(e) => Check::new(CheckId::E, false, e.to_string()),
    }
}

fn check_torus_type(inst: &FamilyInstance) -> Check {
    let Some((da, db)) = inst.torus_type else {
        if inst.family.is_torus_family() {
            return Check::new(CheckId::F, false, "torus family without a torus type".into());
        }
        return Check::skip(CheckId::F, "not a torus knot");
    };
    let lambda = da.lcm(&db);
    if !solves_euler_equation(da, db) {
        return Check::new(CheckId::F, false, format!("1/{da} + 1/{db} + 1/{lambda} != 1"));
    }
    let Some(w) = &inst.monodromy else {
        return Check::new(CheckId::F, false, "torus knot without monodromy".into());
    };
    let class = classify(&evaluate(w));
    Check::new(
        CheckId::F,
        class == NTClass::Periodic { order: lambda },
        format!("{{{da},{db}}} gives period {lambda}; {w} is {class}"),
    )
}
