//! Surgery descriptions on links, modelled by linking data.
//!
//! A [`FramedLink`] stores pairwise linking numbers and a coefficient per
//! component. First homology of the surgered manifold is generated by the
//! meridians `μ₁..μₙ`; a component filled along `p/q` contributes the relation
//! `p·μᵢ + q·λᵢ = 0` with `λᵢ = Σⱼ lk(i,j)·μⱼ`. Unfilled components add no
//! relation, so their meridians survive as free generators of the exterior.

mod linkfile;
pub mod snf;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lensspace::Slope;

/// What a component is filled with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Coefficient {
    /// Dehn filling along a slope; `∞` is the trivial filling.
    Filled(Slope),
    /// The component is drilled out and left as a torus boundary.
    Unfilled,
}

impl Coefficient {
    pub fn slope(&self) -> Option<Slope> {
        match self {
            Coefficient::Filled(s) => Some(*s),
            Coefficient::Unfilled => None,
        }
    }
}

impl From<Slope> for Coefficient {
    fn from(s: Slope) -> Self {
        Coefficient::Filled(s)
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Filled(s) => write!(f, "{s}"),
            Coefficient::Unfilled => write!(f, "-"),
        }
    }
}

impl std::str::FromStr for Coefficient {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "-" | "·" => Ok(Coefficient::Unfilled),
            other => Ok(Coefficient::Filled(other.parse()?)),
        }
    }
}

impl Serialize for Coefficient {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Coefficient {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Links whose linking data ships with the library.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum BuiltinLink {
    Unknot,
    /// Two components, linking number 0.
    Whitehead,
    /// Three-component chain with every pairwise linking number `+1`; at the
    /// level of linking data this is the pretzel link `P(-2,-2,-2)`.
    Chain3,
}

impl BuiltinLink {
    pub fn name(&self) -> &'static str {
        match self {
            BuiltinLink::Unknot => "UNKNOT",
            BuiltinLink::Whitehead => "WHITEHEAD",
            BuiltinLink::Chain3 => "CHAIN3",
        }
    }

    pub fn from_name(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "UNKNOT" => Ok(BuiltinLink::Unknot),
            "WHITEHEAD" => Ok(BuiltinLink::Whitehead),
            "CHAIN3" => Ok(BuiltinLink::Chain3),
            _ => Err(Error::Parse { what: "builtin link", input: s.to_string() }),
        }
    }

    pub fn linking(&self) -> Vec<Vec<i64>> {
        match self {
            BuiltinLink::Unknot => vec![vec![0]],
            BuiltinLink::Whitehead => vec![vec![0, 0], vec![0, 0]],
            BuiltinLink::Chain3 => vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]],
        }
    }
}

/// Fixed linking data with every component unfilled.
pub fn builtin(link: BuiltinLink) -> FramedLink {
    let lk = link.linking();
    let n = lk.len();
    FramedLink { name: Some(link), linking: lk, coefficients: vec![Coefficient::Unfilled; n] }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FramedLink {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<BuiltinLink>,
    linking: Vec<Vec<i64>>,
    coefficients: Vec<Coefficient>,
}

impl FramedLink {
    pub fn new(linking: Vec<Vec<i64>>, coefficients: Vec<Coefficient>) -> Result<Self> {
        let link = FramedLink { name: None, linking, coefficients };
        link.validate()?;
        Ok(link)
    }

    pub(crate) fn validate(&self) -> Result<()> {
        let n = self.coefficients.len();
        if self.linking.len() != n || self.linking.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidLink(format!("linking matrix must be {n}x{n} to match the coefficients")));
        }
        for i in 0..n {
            if self.linking[i][i] != 0 {
                return Err(Error::InvalidLink(format!("nonzero diagonal at component {}", i + 1)));
            }
            for j in 0..i {
                if self.linking[i][j] != self.linking[j][i] {
                    return Err(Error::InvalidLink(format!("linking matrix not symmetric at ({}, {})", i + 1, j + 1)));
                }
            }
        }
        if let Some(b) = self.name {
            if b.linking() != self.linking {
                return Err(Error::InvalidLink(format!("linking data does not match builtin {}", b.name())));
            }
        }
        Ok(())
    }

    /// The same link with new coefficients.
    pub fn with_coefficients(&self, coefficients: Vec<Coefficient>) -> Result<Self> {
        let link = FramedLink { name: self.name, linking: self.linking.clone(), coefficients };
        link.validate()?;
        Ok(link)
    }

    /// Shorthand for filling every component with a slope.
    pub fn filled(&self, slopes: &[Slope]) -> Result<Self> {
        self.with_coefficients(slopes.iter().map(|&s| Coefficient::Filled(s)).collect())
    }

    pub fn set_coefficient(&mut self, i: usize, c: Coefficient) -> Result<()> {
        let slot = self.coefficients.get_mut(i).ok_or(Error::NoSuchComponent(i))?;
        *slot = c;
        Ok(())
    }

    pub fn name(&self) -> Option<BuiltinLink> {
        self.name
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn linking(&self) -> &[Vec<i64>] {
        &self.linking
    }

    pub fn lk(&self, i: usize, j: usize) -> i64 {
        self.linking[i][j]
    }

    pub fn coefficients(&self) -> &[Coefficient] {
        &self.coefficients
    }

    pub fn coefficient(&self, i: usize) -> Result<Coefficient> {
        self.coefficients.get(i).copied().ok_or(Error::NoSuchComponent(i))
    }

    pub fn is_closed(&self) -> bool {
        self.coefficients.iter().all(|c| matches!(c, Coefficient::Filled(_)))
    }
}

impl fmt::Display for FramedLink {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeffs: Vec<String> = self.coefficients.iter().map(|c| c.to_string()).collect();
        match self.name {
            Some(BuiltinLink::Whitehead) => write!(f, "W({})", coeffs.join(", ")),
            Some(BuiltinLink::Chain3) => write!(f, "N({})", coeffs.join(", ")),
            Some(BuiltinLink::Unknot) => write!(f, "U({})", coeffs.join(", ")),
            None => write!(f, "link{:?}({})", self.linking, coeffs.join(", ")),
        }
    }
}

/// Finitely generated abelian group `Z^rank ⊕ Z/d₁ ⊕ ⋯ ⊕ Z/dₖ` with
/// `2 ≤ d₁ | d₂ | ⋯`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianGroup {
    pub rank: usize,
    #[serde(with = "bigint_strings")]
    pub torsion: Vec<BigInt>,
}

/// Order of a group or group element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Order {
    Finite(#[serde(with = "bigint_string")] BigInt),
    Infinite,
}

impl Order {
    pub fn finite(n: i64) -> Self {
        Order::Finite(BigInt::from(n))
    }

    pub fn as_i64(&self) -> Option<i64> {
        match self {
            Order::Finite(n) => i64::try_from(n).ok(),
            Order::Infinite => None,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::Infinite => write!(f, "infinite"),
        }
    }
}

impl AbelianGroup {
    /// Cokernel of the integer relation matrix (rows are relations) on
    /// `ngens` generators.
    pub fn from_relations(rows: &[Vec<BigInt>], ngens: usize) -> Self {
        let factors = snf::invariant_factors(rows, ngens);
        let rank = ngens - factors.len();
        let torsion = factors.into_iter().filter(|d| !d.is_one()).collect();
        AbelianGroup { rank, torsion }
    }

    pub fn from_i64_relations(rows: &[Vec<i64>], ngens: usize) -> Self {
        Self::from_relations(&to_big(rows), ngens)
    }

    pub fn trivial() -> Self {
        AbelianGroup { rank: 0, torsion: Vec::new() }
    }

    /// `Z/n` for `n ≥ 0` (`Z/0 = Z`).
    pub fn cyclic(n: u64) -> Self {
        match n {
            0 => AbelianGroup { rank: 1, torsion: Vec::new() },
            1 => Self::trivial(),
            n => AbelianGroup { rank: 0, torsion: vec![BigInt::from(n)] },
        }
    }

    /// `Z ⊕ self`.
    pub fn plus_z(mut self) -> Self {
        self.rank += 1;
        self
    }

    pub fn order(&self) -> Order {
        if self.rank > 0 {
            return Order::Infinite;
        }
        Order::Finite(self.torsion.iter().product())
    }

    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().product()
    }

    /// Cyclic (including trivial and `Z`).
    pub fn is_cyclic(&self) -> bool {
        self.rank + self.torsion.len() <= 1
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

fn to_big(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
}

/// Relation matrix of `H₁` on the meridian generators: one row
/// `pᵢ·eᵢ + qᵢ·Σⱼ lk(i,j)·eⱼ` per filled component.
pub fn h1_presentation(link: &FramedLink) -> Vec<Vec<i64>> {
    let n = link.len();
    let mut rows = Vec::new();
    for (i, c) in link.coefficients.iter().enumerate() {
        let Coefficient::Filled(s) = c else { continue };
        let mut row: Vec<i64> = (0..n).map(|j| s.den() * link.linking[i][j]).collect();
        row[i] += s.num();
        rows.push(row);
    }
    rows
}

pub fn h1(link: &FramedLink) -> AbelianGroup {
    AbelianGroup::from_i64_relations(&h1_presentation(link), link.len())
}

/// Order of the class `v` (in meridian coordinates) in `H₁(link)`.
///
/// Computed by comparing the group with its quotient by `⟨v⟩`: a drop in
/// rank means `v` has infinite order, otherwise the torsion shrinks by
/// exactly the order of `v`.
pub fn element_order(link: &FramedLink, v: &[i64]) -> Order {
    let n = link.len();
    assert_eq!(v.len(), n);
    let mut rows = to_big(&h1_presentation(link));
    let g = AbelianGroup::from_relations(&rows, n);
    rows.push(v.iter().map(|&x| BigInt::from(x)).collect());
    let quotient = AbelianGroup::from_relations(&rows, n);
    if quotient.rank < g.rank {
        return Order::Infinite;
    }
    Order::Finite(g.torsion_order() / quotient.torsion_order())
}

/// A pair `(c, d)` with `p·d − q·c = 1`.
pub fn bezout_pair(slope: Slope) -> (i64, i64) {
    let (p, q) = (slope.num(), slope.den());
    let e = p.extended_gcd(&q);
    debug_assert_eq!(e.gcd.abs(), 1);
    let (x, y) = if e.gcd < 0 { (-e.x, -e.y) } else { (e.x, e.y) };
    // p·x + q·y = 1, so d = x and c = -y
    (-y, x)
}

/// Homology class of the core of the filling solid torus on component `i`,
/// expressed in meridian coordinates, using the Bézout pair `(c, d)`:
/// the core is isotopic to `c·μᵢ + d·λᵢ`.
pub fn core_class_with(link: &FramedLink, i: usize, (c, d): (i64, i64)) -> Result<Vec<i64>> {
    let slope = match link.coefficient(i)? {
        Coefficient::Filled(s) => s,
        Coefficient::Unfilled => return Err(Error::UnfilledComponent(i)),
    };
    if slope.num() as i128 * d as i128 - slope.den() as i128 * c as i128 != 1 {
        return Err(Error::InvalidLink(format!("({c}, {d}) is not a Bezout pair for slope {slope}")));
    }
    let mut v: Vec<i64> = (0..link.len()).map(|j| d * link.linking[i][j]).collect();
    v[i] += c;
    Ok(v)
}

/// Order of the core of the filling on component `i` in `H₁` of the closed
/// manifold.
pub fn core_order(link: &FramedLink, i: usize) -> Result<Order> {
    let slope = link.coefficient(i)?.slope().ok_or(Error::UnfilledComponent(i))?;
    core_order_with(link, i, bezout_pair(slope))
}

/// [`core_order`] with an explicit Bézout pair; the answer does not depend on
/// which pair is chosen.
pub fn core_order_with(link: &FramedLink, i: usize, bezout: (i64, i64)) -> Result<Order> {
    let v = core_class_with(link, i, bezout)?;
    if !link.is_closed() {
        return Err(Error::NotClosed);
    }
    Ok(element_order(link, &v))
}

/// Blow down a `±1`-framed component `c`: it is deleted, every other
/// coefficient shifts by `-ε·lk(c,i)²` and linking numbers by
/// `-ε·lk(c,i)·lk(c,j)`.
pub fn blow_down(link: &FramedLink, c: usize) -> Result<FramedLink> {
    let coeff = link.coefficient(c)?;
    let eps = match coeff.slope().and_then(|s| s.as_integer()) {
        Some(e @ (1 | -1)) => e,
        _ => return Err(Error::NotUnitFraming(coeff.to_string())),
    };
    let keep: Vec<usize> = (0..link.len()).filter(|&i| i != c).collect();
    let linking = keep
        .iter()
        .map(|&i| {
            keep.iter()
                .map(|&j| if i == j { 0 } else { link.linking[i][j] - eps * link.linking[c][i] * link.linking[c][j] })
                .collect()
        })
        .collect();
    let coefficients = keep
        .iter()
        .map(|&i| match link.coefficients[i] {
            Coefficient::Filled(s) => {
                let shift = eps * link.linking[c][i] * link.linking[c][i];
                Coefficient::Filled(s.sub(Slope::integer(shift)))
            }
            Coefficient::Unfilled => Coefficient::Unfilled,
        })
        .collect();
    FramedLink::new(linking, coefficients)
}

mod bigint_string {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

mod bigint_strings {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(|b| b.to_string()).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<String>::deserialize(d)?.iter().map(|s| s.parse().map_err(serde::de::Error::custom)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn slope(s: &str) -> Slope {
        s.parse().unwrap()
    }

    fn whitehead(a: &str, b: &str) -> FramedLink {
        let c = |s: &str| s.parse::<Coefficient>().unwrap();
        builtin(BuiltinLink::Whitehead).with_coefficients(vec![c(a), c(b)]).unwrap()
    }

    fn chain3(a: Slope, b: Slope, c: Slope) -> FramedLink {
        builtin(BuiltinLink::Chain3).filled(&[a, b, c]).unwrap()
    }

    #[test]
    fn presentations() {
        assert_eq!(h1_presentation(&whitehead("-3", "-4")), vec![vec![-3, 0], vec![0, -4]]);
        let u = builtin(BuiltinLink::Unknot).filled(&[slope("7/2")]).unwrap();
        assert_eq!(h1_presentation(&u), vec![vec![7]]);
        let n = chain3(slope("5/3"), slope("-2"), Slope::integer(1));
        assert_eq!(h1_presentation(&n), vec![vec![5, 3, 3], vec![1, -2, 1], vec![1, 1, 1]]);
        assert_eq!(h1_presentation(&whitehead("-3", "-")), vec![vec![-3, 0]]);
    }

    #[test]
    fn homology_examples() {
        assert_eq!(h1(&whitehead("-3", "-4")), AbelianGroup::cyclic(12));
        assert_eq!(h1(&whitehead("-2", "-5")), AbelianGroup::cyclic(10));
        assert_eq!(h1(&whitehead("-3", "-")), AbelianGroup::cyclic(3).plus_z());
        assert_eq!(h1(&whitehead("-3", "-")).to_string(), "Z + Z/3");
        assert_eq!(h1(&whitehead("-2", "-4")).to_string(), "Z/2 + Z/4");
        assert_eq!(h1(&whitehead("inf", "-1")), AbelianGroup::trivial());
        assert_eq!(h1(&whitehead("0", "inf")).to_string(), "Z");
    }

    #[test]
    fn core_orders() {
        let w = whitehead("-3", "-5/2");
        assert_eq!(core_order(&w, 0).unwrap(), Order::finite(3));
        assert_eq!(core_order(&whitehead("-2", "-9/2"), 0).unwrap(), Order::finite(2));
        for p in [2i64, 5, -7, 12] {
            let u = builtin(BuiltinLink::Unknot).filled(&[Slope::integer(p)]).unwrap();
            assert_eq!(core_order(&u, 0).unwrap(), Order::finite(p.abs()));
        }
        // S¹×S²: the core of 0-surgery generates Z
        let u = builtin(BuiltinLink::Unknot).filled(&[Slope::integer(0)]).unwrap();
        assert_eq!(core_order(&u, 0).unwrap(), Order::Infinite);
    }

    #[test]
    fn core_order_errors() {
        assert_eq!(core_order(&whitehead("-", "-4"), 0), Err(Error::UnfilledComponent(0)));
        assert_eq!(core_order(&whitehead("-3", "-"), 0), Err(Error::NotClosed));
        assert_eq!(core_order(&whitehead("-3", "-4"), 5), Err(Error::NoSuchComponent(5)));
        assert!(core_order_with(&whitehead("-3", "-4"), 0, (1, 1)).is_err());
    }

    #[test]
    fn bezout_pairs_solve() {
        for s in ["-3", "-5/2", "7/3", "1/0", "0", "13/-8"] {
            let sl = slope(s);
            let (c, d) = bezout_pair(sl);
            assert_eq!(sl.num() * d - sl.den() * c, 1, "{s}");
        }
    }

    #[test]
    fn blow_down_chain() {
        let n = chain3(Slope::integer(-2), Slope::integer(-3), Slope::integer(1));
        let w = blow_down(&n, 2).unwrap();
        assert_eq!(w.linking(), &[vec![0, 0], vec![0, 0]]);
        assert_eq!(w.coefficients(), &[Slope::integer(-3).into(), Slope::integer(-4).into()]);
        assert_eq!(h1(&n), AbelianGroup::cyclic(12));
        assert_eq!(h1(&w), AbelianGroup::cyclic(12));
    }

    #[test]
    fn blow_down_split_unknot() {
        let link = FramedLink::new(
            vec![vec![0, 2, 0], vec![2, 0, 0], vec![0, 0, 0]],
            vec![slope("3/2").into(), slope("-1").into(), slope("-1").into()],
        )
        .unwrap();
        let b = blow_down(&link, 2).unwrap();
        assert_eq!(b.linking(), &[vec![0, 2], vec![2, 0]]);
        assert_eq!(b.coefficients(), &link.coefficients()[..2]);
    }

    #[test]
    fn blow_down_rejects_other_framings() {
        let n = chain3(Slope::integer(-2), Slope::integer(-3), Slope::integer(2));
        assert!(matches!(blow_down(&n, 2), Err(Error::NotUnitFraming(_))));
        let n = chain3(Slope::integer(-2), Slope::integer(-3), slope("1/2"));
        assert!(blow_down(&n, 2).is_err());
    }

    #[test]
    fn link_validation() {
        assert!(FramedLink::new(vec![vec![0, 1], vec![2, 0]], vec![Coefficient::Unfilled; 2]).is_err());
        assert!(FramedLink::new(vec![vec![1]], vec![Coefficient::Unfilled]).is_err());
        assert!(FramedLink::new(vec![vec![0]], vec![Coefficient::Unfilled; 2]).is_err());
    }

    #[test]
    fn builtins() {
        assert_eq!(builtin(BuiltinLink::Whitehead).lk(0, 1), 0);
        assert_eq!(builtin(BuiltinLink::Unknot).len(), 1);
        let c = builtin(BuiltinLink::Chain3);
        assert!((0..3).all(|i| (0..3).all(|j| i == j || c.lk(i, j) == 1)));
        assert!(BuiltinLink::from_name("hopf").is_err());
    }

    fn rational() -> impl Strategy<Value = Slope> {
        (-40i64..40, 1i64..12).prop_map(|(a, b)| Slope::new(a, b).unwrap())
    }

    /// Direct 2×2 oracle: with integer framings `a, b` and linking `l`, the
    /// order of H₁ is |ab − l²| (infinite when zero).
    fn det_order(a: i64, b: i64, l: i64) -> Order {
        match (a * b - l * l).abs() {
            0 => Order::Infinite,
            d => Order::finite(d),
        }
    }

    proptest! {
        #[test]
        fn blow_down_preserves_homology(a in rational(), b in rational(), l in -3i64..4, eps in prop_oneof![Just(1i64), Just(-1i64)], m in -3i64..4, n in -3i64..4) {
            let link = FramedLink::new(
                vec![vec![0, l, m], vec![l, 0, n], vec![m, n, 0]],
                vec![a.into(), b.into(), Slope::integer(eps).into()],
            ).unwrap();
            prop_assert_eq!(h1(&blow_down(&link, 2).unwrap()), h1(&link));
        }

        #[test]
        fn bezout_choice_irrelevant(a in rational(), b in rational(), t in -5i64..5) {
            let w = builtin(BuiltinLink::Whitehead).filled(&[a, b]).unwrap();
            prop_assume!(w.is_closed());
            for i in 0..2 {
                let s = w.coefficient(i).unwrap().slope().unwrap();
                let (c, d) = bezout_pair(s);
                let other = (c + t * s.num(), d + t * s.den());
                prop_assert_eq!(core_order_with(&w, i, (c, d)).unwrap(), core_order_with(&w, i, other).unwrap());
            }
        }

        #[test]
        fn integral_two_component_matches_determinant(a in -20i64..20, b in -20i64..20, l in -5i64..6) {
            let link = FramedLink::new(vec![vec![0, l], vec![l, 0]], vec![Slope::integer(a).into(), Slope::integer(b).into()]).unwrap();
            prop_assert_eq!(h1(&link).order(), det_order(a, b, l));
        }

        #[test]
        fn whitehead_core_order_matches_direct_formula(a in rational(), b in rational()) {
            // lk = 0, so H₁ = Z/|p₁| ⊕ Z/|p₂| and the core class is (c, 0)
            let w = builtin(BuiltinLink::Whitehead).filled(&[a, b]).unwrap();
            prop_assume!(a.num() != 0 && b.num() != 0);
            let (c, _) = bezout_pair(a);
            let p = a.num().abs();
            let expected = p / c.abs().gcd(&p);
            prop_assert_eq!(core_order(&w, 0).unwrap(), Order::finite(expected));
        }
    }
}
