//! Arc systems on the once-punctured torus and their face structure.
//!
//! A once-punctured torus carries at most three classes of pairwise disjoint
//! essential arcs. A configuration takes `n_a, n_b, n_c` parallel copies of
//! each, `E = n_a + n_b + n_c = s·t/2` arcs in all, so `∂S` carries `2E`
//! endpoints. Going around `∂S` the endpoints come in six bundles
//! `A⁺ B⁺ C⁺ A⁻ B⁻ C⁻`; strand `j` of `X⁺` is joined to strand `n_X-1-j` of
//! `X⁻`. The endpoint at position `m` is labelled `(m + offset) mod t + 1`.
//!
//! Corner `m` is the stretch of `∂S` between endpoints `m` and `m+1`. Leaving
//! a face through corner `m` one reaches endpoint `m+1`, crosses its arc, and
//! the next corner of the same face is `π(m+1)`. This traces the boundary
//! components of all faces. When two or three classes are present every face
//! is a disk; with one class the two outermost corners bound a single annulus.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ArcClass {
    A,
    B,
    C,
}

impl ArcClass {
    pub const ALL: [ArcClass; 3] = [ArcClass::A, ArcClass::B, ArcClass::C];

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for ArcClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawConfig", into = "RawConfig")]
pub struct ArcSystemConfig {
    s: usize,
    t: usize,
    n: [usize; 3],
    offset: usize,
}

#[derive(Serialize, Deserialize)]
struct RawConfig {
    s: usize,
    t: usize,
    multiplicities: [usize; 3],
    offset: usize,
}

impl TryFrom<RawConfig> for ArcSystemConfig {
    type Error = Error;
    fn try_from(r: RawConfig) -> Result<Self> {
        build(r.s, r.t, r.multiplicities[0], r.multiplicities[1], r.multiplicities[2], r.offset)
    }
}

impl From<ArcSystemConfig> for RawConfig {
    fn from(c: ArcSystemConfig) -> Self {
        RawConfig { s: c.s, t: c.t, multiplicities: c.n, offset: c.offset }
    }
}

pub fn build(s: usize, t: usize, na: usize, nb: usize, nc: usize, offset: usize) -> Result<ArcSystemConfig> {
    if t < 2 || !t.is_multiple_of(2) {
        return Err(Error::InvalidArcSystem(format!("t = {t} must be even and at least 2")));
    }
    if s < 1 {
        return Err(Error::InvalidArcSystem("s must be positive".into()));
    }
    if na + nb + nc != s * t / 2 {
        return Err(Error::InvalidArcSystem(format!(
            "multiplicities {na}+{nb}+{nc} do not sum to st/2 = {}",
            s * t / 2
        )));
    }
    Ok(ArcSystemConfig { s, t, n: [na, nb, nc], offset: offset % t })
}

/// One arc, with endpoints `ends.0 < ends.1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub class: ArcClass,
    pub ends: (usize, usize),
    pub labels: (usize, usize),
}

impl ArcSystemConfig {
    pub fn s(&self) -> usize {
        self.s
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn multiplicities(&self) -> [usize; 3] {
        self.n
    }

    pub fn offset(&self) -> usize {
        self.offset
    }

    pub fn edge_count(&self) -> usize {
        self.n.iter().sum()
    }

    pub fn endpoint_count(&self) -> usize {
        2 * self.edge_count()
    }

    /// Start of the `X⁺` bundle; `X⁻` starts `E` later.
    fn bundle_start(&self, x: ArcClass) -> usize {
        self.n[..x.index()].iter().sum()
    }

    /// Class of the endpoint at position `m`.
    pub fn class_at(&self, m: usize) -> ArcClass {
        let e = self.edge_count();
        let local = m % e;
        let mut acc = 0;
        for x in ArcClass::ALL {
            acc += self.n[x.index()];
            if local < acc {
                return x;
            }
        }
        unreachable!("position {m} out of range")
    }

    /// The endpoint joined to `m` by an arc.
    pub fn partner(&self, m: usize) -> usize {
        let e = self.edge_count();
        let x = self.class_at(m);
        let start = self.bundle_start(x);
        let nx = self.n[x.index()];
        if m < e {
            e + start + nx - 1 - (m - start)
        } else {
            start + nx - 1 - (m - e - start)
        }
    }

    /// Vertex label in `1..=t`.
    pub fn label(&self, m: usize) -> usize {
        (m + self.offset) % self.t + 1
    }

    /// Class letters around `∂S`, space separated.
    pub fn word(&self) -> String {
        (0..self.endpoint_count()).map(|m| self.class_at(m).to_string()).collect::<Vec<_>>().join(" ")
    }

    pub fn edges(&self) -> Vec<Edge> {
        (0..self.endpoint_count())
            .filter_map(|m| {
                let p = self.partner(m);
                (m < p).then(|| Edge { class: self.class_at(m), ends: (m, p), labels: (self.label(m), self.label(p)) })
            })
            .collect()
    }

    fn edge_index_by_endpoint(&self) -> Vec<usize> {
        let mut idx = vec![0; self.endpoint_count()];
        for (i, e) in self.edges().iter().enumerate() {
            idx[e.ends.0] = i;
            idx[e.ends.1] = i;
        }
        idx
    }

    fn nonempty_classes(&self) -> usize {
        self.n.iter().filter(|&&v| v > 0).count()
    }
}

impl fmt::Display for ArcSystemConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s={} t={} n=({},{},{}) offset={}", self.s, self.t, self.n[0], self.n[1], self.n[2], self.offset)
    }
}

/// Every arc joins labels of opposite parity. Checked edge by edge.
pub fn parity_check(c: &ArcSystemConfig) -> bool {
    c.edges().iter().all(|e| (e.labels.0 + e.labels.1) % 2 == 1)
}

/// Closed form of [`parity_check`]: `E + n_X` even for each nonempty class.
pub fn parity_closed_form(c: &ArcSystemConfig) -> bool {
    let e = c.edge_count();
    c.n.iter().all(|&nx| nx == 0 || (e + nx).is_multiple_of(2))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Topology {
    Disk,
    Annulus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Amber,
    Blue,
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Color::Amber => write!(f, "amber"),
            Color::Blue => write!(f, "blue"),
        }
    }
}

/// A stretch of `∂S` between endpoints `gap` and `gap+1`; it runs along the
/// 1-handle `H_{handle, handle+1}`, amber when `handle` is odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Corner {
    pub gap: usize,
    pub handle: usize,
    pub color: Color,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    pub topology: Topology,
    /// Edge indices into [`ArcSystemConfig::edges`], in boundary order.
    pub edges: Vec<usize>,
    pub corners: Vec<Corner>,
    /// Common color of the corners, when they agree.
    pub color: Option<Color>,
}

impl Face {
    /// `n` for an `n`-gon.
    pub fn sides(&self) -> usize {
        self.edges.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceReport {
    pub faces: Vec<Face>,
}

impl FaceReport {
    pub fn disks(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter().filter(|f| f.topology == Topology::Disk)
    }

    pub fn annuli(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter().filter(|f| f.topology == Topology::Annulus)
    }
}

fn corner(c: &ArcSystemConfig, gap: usize) -> Corner {
    let handle = c.label(gap);
    let color = if handle % 2 == 1 { Color::Amber } else { Color::Blue };
    Corner { gap, handle, color }
}

/// Boundary cycles of the faces, as corner sequences, ordered by least
/// corner.
fn corner_cycles(c: &ArcSystemConfig) -> Vec<Vec<usize>> {
    let n = c.endpoint_count();
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut cyc = Vec::new();
        let mut m = start;
        while !seen[m] {
            seen[m] = true;
            cyc.push(m);
            m = c.partner((m + 1) % n);
        }
        cycles.push(cyc);
    }
    cycles
}

pub fn faces(c: &ArcSystemConfig) -> FaceReport {
    let n = c.endpoint_count();
    let e = c.edge_count();
    let edge_of = c.edge_index_by_endpoint();
    let cycles = corner_cycles(c);

    // group boundary cycles into faces
    let mut groups: Vec<Vec<Vec<usize>>> = Vec::new();
    if c.nonempty_classes() == 1 {
        let outer = |cyc: &Vec<usize>| cyc.contains(&(e - 1)) || cyc.contains(&(n - 1));
        let (annulus, disks): (Vec<_>, Vec<_>) = cycles.into_iter().partition(outer);
        groups.extend(disks.into_iter().map(|cyc| vec![cyc]));
        groups.push(annulus);
    } else {
        groups.extend(cycles.into_iter().map(|cyc| vec![cyc]));
    }

    let faces = groups
        .into_iter()
        .map(|group| {
            let topology = if group.len() == 1 { Topology::Disk } else { Topology::Annulus };
            let mut edges = Vec::new();
            let mut corners = Vec::new();
            for cyc in &group {
                for &m in cyc {
                    corners.push(corner(c, m));
                    edges.push(edge_of[(m + 1) % n]);
                }
            }
            let first = corners[0].color;
            let color = corners.iter().all(|k| k.color == first).then_some(first);
            Face { topology, edges, corners, color }
        })
        .collect();
    FaceReport { faces }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScharlemannCycle {
    pub edges: Vec<usize>,
    pub length: usize,
    pub label_pair: (usize, usize),
    pub color: Color,
}

/// Disk faces whose corners all run along one handle `H_{i,i+1}` and whose
/// edges all carry the label pair `{i, i+1}`.
pub fn scharlemann_cycles(c: &ArcSystemConfig) -> Vec<ScharlemannCycle> {
    let edges = c.edges();
    let t = c.t();
    faces(c)
        .faces
        .into_iter()
        .filter(|f| f.topology == Topology::Disk)
        .filter_map(|f| {
            let i = f.corners[0].handle;
            let j = i % t + 1;
            let pair = (i.min(j), i.max(j));
            let same_handle = f.corners.iter().all(|k| k.handle == i);
            let same_labels = f.edges.iter().all(|&ei| {
                let (a, b) = edges[ei].labels;
                (a.min(b), a.max(b)) == pair
            });
            (same_handle && same_labels).then(|| ScharlemannCycle {
                length: f.edges.len(),
                edges: f.edges,
                label_pair: pair,
                color: f.corners[0].color,
            })
        })
        .collect()
}

/// Parity-passing configurations up to permutation of the classes and label
/// offset, with every multiplicity at most `max_parallel` and (with
/// `require_max`) some class attaining it. Sorted by `s`, then by the
/// descending multiplicity vector.
pub fn enumerate(
    t: usize,
    max_parallel: usize,
    require_max: bool,
    s_range: RangeInclusive<usize>,
) -> Vec<ArcSystemConfig> {
    if t < 2 || !t.is_multiple_of(2) {
        return Vec::new();
    }
    let half = t / 2;
    let mut found = BTreeMap::new();
    for a in 0..=max_parallel {
        for b in 0..=a {
            for cc in 0..=b {
                let sum = a + b + cc;
                if sum == 0 || sum % half != 0 || (require_max && a != max_parallel) {
                    continue;
                }
                let s = sum / half;
                if !s_range.contains(&s) {
                    continue;
                }
                let config = build(s, t, a, b, cc, 0).expect("sum matches by construction");
                if parity_check(&config) {
                    found.insert((s, [a, b, cc]), config);
                }
            }
        }
    }
    found.into_values().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(s: usize, t: usize, n: [usize; 3]) -> ArcSystemConfig {
        build(s, t, n[0], n[1], n[2], 0).unwrap()
    }

    fn shape(report: &FaceReport) -> Vec<(Topology, usize, Option<Color>)> {
        let mut v: Vec<_> = report.faces.iter().map(|f| (f.topology, f.sides(), f.color)).collect();
        v.sort_by_key(|&(t, n, c)| (t as u8, n, c));
        v
    }

    #[test]
    fn build_examples() {
        let c = cfg(3, 2, [1, 1, 1]);
        assert_eq!((c.endpoint_count(), c.edge_count()), (6, 3));
        assert_eq!(c.word(), "A B C A B C");
        let c = cfg(5, 2, [3, 1, 1]);
        assert_eq!((c.endpoint_count(), c.edge_count()), (10, 5));
        let c = cfg(2, 2, [2, 0, 0]);
        assert_eq!((c.endpoint_count(), c.edge_count()), (4, 2));
        assert!(c.edges().iter().all(|e| e.class == ArcClass::A));
        assert!(build(3, 2, 1, 1, 0, 0).is_err());
        assert!(build(3, 3, 1, 1, 1, 0).is_err());
    }

    #[test]
    fn nested_pairing() {
        let c = cfg(5, 2, [3, 1, 1]);
        // A⁺ = 0,1,2 and A⁻ = 5,6,7
        assert_eq!((c.partner(0), c.partner(1), c.partner(2)), (7, 6, 5));
        assert_eq!((c.partner(3), c.partner(4)), (8, 9));
        for m in 0..c.endpoint_count() {
            assert_eq!(c.partner(c.partner(m)), m);
            assert_ne!(c.partner(m), m);
            assert_eq!(c.class_at(m), c.class_at(c.partner(m)));
        }
    }

    #[test]
    fn parity_examples() {
        assert!(parity_check(&cfg(3, 2, [1, 1, 1])));
        assert!(!parity_check(&cfg(5, 2, [3, 2, 0])));
        assert!(parity_check(&cfg(3, 2, [3, 0, 0])));
        // two odd classes fail even though their parities agree
        assert!(!parity_check(&cfg(2, 2, [1, 1, 0])));
    }

    #[test]
    fn parity_closed_form_matches_direct_check() {
        for t in [2usize, 4] {
            for e in 1..=12usize {
                if (2 * e) % t != 0 {
                    continue;
                }
                let s = 2 * e / t;
                for a in 0..=e {
                    for b in 0..=e - a {
                        for offset in 0..t {
                            let c = build(s, t, a, b, e - a - b, offset).unwrap();
                            assert_eq!(parity_check(&c), parity_closed_form(&c), "{c}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        let three: Vec<[usize; 3]> = enumerate(2, 3, true, 1..=usize::MAX).iter().map(|c| c.multiplicities()).collect();
        assert_eq!(three, vec![[3, 0, 0], [3, 1, 1], [3, 3, 1], [3, 3, 3]]);
        let two: Vec<(usize, [usize; 3])> =
            enumerate(2, 2, false, 1..=usize::MAX).iter().map(|c| (c.s(), c.multiplicities())).collect();
        assert_eq!(two, vec![(1, [1, 0, 0]), (2, [2, 0, 0]), (3, [1, 1, 1]), (4, [2, 2, 0]), (6, [2, 2, 2])]);
        let one: Vec<[usize; 3]> = enumerate(2, 1, true, 1..=usize::MAX).iter().map(|c| c.multiplicities()).collect();
        assert_eq!(one, vec![[1, 0, 0], [1, 1, 1]]);
        assert_eq!(enumerate(2, 2, false, 2..=3).len(), 2);
    }

    #[test]
    fn parity_rule_at_t2_forces_label_pair_12() {
        for c in enumerate(2, 6, false, 1..=usize::MAX) {
            assert!(c.edges().iter().all(|e| {
                let (a, b) = e.labels;
                (a.min(b), a.max(b)) == (1, 2)
            }));
        }
    }

    #[test]
    fn face_examples() {
        use Color::*;
        use Topology::*;
        let f = faces(&cfg(3, 2, [1, 1, 1]));
        assert_eq!(shape(&f), vec![(Disk, 3, Some(Amber)), (Disk, 3, Some(Blue))]);
        let f = faces(&cfg(2, 2, [2, 0, 0]));
        assert_eq!(shape(&f), vec![(Disk, 2, Some(Amber)), (Annulus, 2, Some(Blue))]);
        let f = faces(&cfg(1, 2, [1, 0, 0]));
        assert_eq!(shape(&f), vec![(Annulus, 2, None)]);
        let f = faces(&cfg(6, 2, [2, 2, 2]));
        assert_eq!(
            shape(&f),
            vec![
                (Disk, 2, Some(Amber)),
                (Disk, 2, Some(Amber)),
                (Disk, 2, Some(Amber)),
                (Disk, 3, Some(Blue)),
                (Disk, 3, Some(Blue))
            ]
        );
    }

    #[test]
    fn euler_characteristic() {
        // χ(S) = -1, and cutting along E arcs raises it by E
        for t in [2usize, 4, 6] {
            for c in enumerate(t, 4, false, 1..=usize::MAX) {
                let chi: i64 = faces(&c).faces.iter().map(|f| if f.topology == Topology::Disk { 1 } else { 0 }).sum();
                assert_eq!(chi, c.edge_count() as i64 - 1, "{c}");
            }
        }
    }

    #[test]
    fn every_edge_side_used_once() {
        for c in enumerate(2, 4, false, 1..=usize::MAX) {
            let mut uses = vec![0; c.edge_count()];
            for f in faces(&c).faces {
                for e in f.edges {
                    uses[e] += 1;
                }
            }
            assert!(uses.iter().all(|&u| u == 2), "{c}");
        }
    }

    #[test]
    fn checkerboard() {
        for t in [2usize, 4] {
            for c in enumerate(t, 4, false, 1..=usize::MAX) {
                let report = faces(&c);
                // an annulus can see both handles, e.g. for n = (3,0,0)
                for f in report.disks() {
                    assert!(f.color.is_some(), "{c}");
                }
                // the two sides of each edge lie in faces of opposite color
                let mut side_colors: Vec<Vec<Color>> = vec![Vec::new(); c.edge_count()];
                for f in &report.faces {
                    for (e, k) in f.edges.iter().zip(&f.corners) {
                        side_colors[*e].push(k.color);
                    }
                }
                for sides in side_colors {
                    assert_eq!(sides.len(), 2);
                    assert_ne!(sides[0], sides[1], "{c}");
                }
            }
        }
    }

    #[test]
    fn scharlemann_examples() {
        let c = cfg(3, 2, [1, 1, 1]);
        let sc = scharlemann_cycles(&c);
        assert_eq!(sc.len(), 2);
        assert!(sc.iter().all(|x| x.length == 3 && x.label_pair == (1, 2)));
        let mut a = sc[0].edges.clone();
        let mut b = sc[1].edges.clone();
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b);

        let sc = scharlemann_cycles(&cfg(2, 2, [2, 0, 0]));
        assert_eq!(sc.iter().map(|x| x.length).collect::<Vec<_>>(), vec![2]);

        let sc = scharlemann_cycles(&cfg(6, 2, [2, 2, 2]));
        let mut profile: Vec<(usize, Color)> = sc.iter().map(|x| (x.length, x.color)).collect();
        profile.sort();
        assert_eq!(
            profile,
            vec![(2, Color::Amber), (2, Color::Amber), (2, Color::Amber), (3, Color::Blue), (3, Color::Blue)]
        );
    }

    #[test]
    fn larger_t_has_no_scharlemann_trigons_without_matching_labels() {
        // at t = 4 the labels around a trigon span more than one handle
        let c = cfg(3, 4, [2, 2, 2]);
        assert!(parity_check(&c));
        for x in scharlemann_cycles(&c) {
            assert!(x.edges.iter().all(|&e| {
                let (a, b) = c.edges()[e].labels;
                (a.min(b), a.max(b)) == x.label_pair
            }));
        }
    }

    #[test]
    fn serde_round_trip_validates() {
        let c = build(5, 2, 3, 1, 1, 1).unwrap();
        let text = serde_json::to_string(&c).unwrap();
        assert_eq!(text, r#"{"s":5,"t":2,"multiplicities":[3,1,1],"offset":1}"#);
        assert_eq!(serde_json::from_str::<ArcSystemConfig>(&text).unwrap(), c);
        assert!(
            serde_json::from_str::<ArcSystemConfig>(r#"{"s":5,"t":2,"multiplicities":[3,1,0],"offset":0}"#).is_err()
        );
    }
}
