//! Directions, the two-angle seven-direction configuration, and its
//! orthogonality graph.
//!
//! The configuration places one orthonormal cross in the x-z plane
//! (`a`, `c` around the axis `b`), a second in the y-z plane (`d`, `f`
//! around `e`), and a seventh direction `g` orthogonal to `c` and `f`.
//! Writing s, c, t for the sine, cosine and tangent of the first opening
//! angle and s', c', t' for the second, the coordinates are
//!
//! ```text
//! b = (1, 0, 0)        e = (0, 1, 0)
//! a = (c, 0, s)        d = (0, c', s')
//! c = (s, 0, -c)       f = (0, s', -c')
//! g = (t', t, t t') / D      with D^2 = t^2 + t'^2 + (t t')^2
//! ```
//!
//! Signs are fixed arbitrarily; every quantity consumed downstream depends
//! only on squared dot products. The configuration satisfies
//! `a.d = s s'`, `(e.g)^2 = t^2/D^2`, `(b.g)^2 = t'^2/D^2`, and exactly
//! nine orthogonal pairs forming two triangles `{a,e,c}` and `{d,b,f}`.

use std::f64::consts::FRAC_PI_2;
use std::fmt;

use crate::error::{Error, Result};

/// Norm below which a vector cannot be meaningfully normalized.
const NORM_FLOOR: f64 = 1e-12;

/// Default tolerance for treating a dot product as zero.
pub const DEFAULT_ORTHO_TOL: f64 = 1e-9;

/// Largest accepted orthogonality tolerance.
pub const MAX_ORTHO_TOL: f64 = 1e-6;

/// A real 3-vector of unit norm; the measurement-direction primitive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitVector3 {
    x: f64,
    y: f64,
    z: f64,
}

impl UnitVector3 {
    /// Normalizes `(x, y, z)`. Fails if the norm is below `1e-12`.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        let norm = (x * x + y * y + z * z).sqrt();
        if !(norm > NORM_FLOOR) {
            return Err(Error::DegenerateDirection { norm });
        }
        Ok(Self {
            x: x / norm,
            y: y / norm,
            z: z / norm,
        })
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn z(&self) -> f64 {
        self.z
    }

    pub fn components(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn dot(&self, other: &Self) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    /// Raw cross product components (not normalized).
    pub fn cross(&self, other: &Self) -> [f64; 3] {
        [
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        ]
    }
}

impl fmt::Display for UnitVector3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

/// Completes an orthogonal pair to a right-handed orthonormal triple.
///
/// Fails when `|u.v|` exceeds the default orthogonality tolerance.
pub fn complete_triple(u: &UnitVector3, v: &UnitVector3) -> Result<UnitVector3> {
    let dot = u.dot(v);
    if dot.abs() > DEFAULT_ORTHO_TOL {
        return Err(Error::NotOrthogonal {
            dot: dot.abs(),
            tol: DEFAULT_ORTHO_TOL,
        });
    }
    let [x, y, z] = u.cross(v);
    UnitVector3::new(x, y, z)
}

/// The two opening angles with their cached trigonometric values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleParams {
    theta: f64,
    theta_prime: f64,
    sin_theta: f64,
    cos_theta: f64,
    tan_theta: f64,
    sin_theta_prime: f64,
    cos_theta_prime: f64,
    tan_theta_prime: f64,
    d: f64,
}

impl AngleParams {
    /// Both angles must lie strictly inside (0, pi/2); at the boundary the
    /// configuration degenerates (legs coincide and the seventh direction
    /// is undefined).
    pub fn new(theta: f64, theta_prime: f64) -> Result<Self> {
        for angle in [theta, theta_prime] {
            if !(angle > 0.0 && angle < FRAC_PI_2) {
                return Err(Error::AngleOutOfRange { angle });
            }
        }
        let (sin_theta, cos_theta) = theta.sin_cos();
        let (sin_theta_prime, cos_theta_prime) = theta_prime.sin_cos();
        let tan_theta = sin_theta / cos_theta;
        let tan_theta_prime = sin_theta_prime / cos_theta_prime;
        let d = (tan_theta.powi(2)
            + tan_theta_prime.powi(2)
            + (tan_theta * tan_theta_prime).powi(2))
        .sqrt();
        Ok(Self {
            theta,
            theta_prime,
            sin_theta,
            cos_theta,
            tan_theta,
            sin_theta_prime,
            cos_theta_prime,
            tan_theta_prime,
            d,
        })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn theta_prime(&self) -> f64 {
        self.theta_prime
    }

    pub fn sin_theta(&self) -> f64 {
        self.sin_theta
    }

    pub fn cos_theta(&self) -> f64 {
        self.cos_theta
    }

    pub fn tan_theta(&self) -> f64 {
        self.tan_theta
    }

    pub fn sin_theta_prime(&self) -> f64 {
        self.sin_theta_prime
    }

    pub fn cos_theta_prime(&self) -> f64 {
        self.cos_theta_prime
    }

    pub fn tan_theta_prime(&self) -> f64 {
        self.tan_theta_prime
    }

    /// Length normalizing the seventh direction:
    /// `D = sqrt(t^2 + t'^2 + (t t')^2)`.
    pub fn d(&self) -> f64 {
        self.d
    }
}

/// The seven node labels in canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Label {
    pub const ALL: [Label; 7] = [
        Label::A,
        Label::B,
        Label::C,
        Label::D,
        Label::E,
        Label::F,
        Label::G,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn as_char(self) -> char {
        (b'a' + self as u8) as char
    }

    pub fn from_char(c: char) -> Option<Self> {
        Self::ALL.get((c as usize).wrapping_sub('a' as usize)).copied()
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// The seven labeled directions generated from a pair of opening angles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SevenVectorConfig {
    params: AngleParams,
    vectors: [UnitVector3; 7],
}

impl SevenVectorConfig {
    /// Builds the configuration from the two opening angles (radians).
    pub fn new(theta: f64, theta_prime: f64) -> Result<Self> {
        Self::from_params(AngleParams::new(theta, theta_prime)?)
    }

    /// Builds the configuration from already-validated parameters.
    pub fn from_params(params: AngleParams) -> Result<Self> {
        let (s, c, t) = (params.sin_theta, params.cos_theta, params.tan_theta);
        let (sp, cp, tp) = (
            params.sin_theta_prime,
            params.cos_theta_prime,
            params.tan_theta_prime,
        );
        let vectors = [
            UnitVector3::new(c, 0.0, s)?,       // a
            UnitVector3::new(1.0, 0.0, 0.0)?,   // b
            UnitVector3::new(s, 0.0, -c)?,      // c
            UnitVector3::new(0.0, cp, sp)?,     // d
            UnitVector3::new(0.0, 1.0, 0.0)?,   // e
            UnitVector3::new(0.0, sp, -cp)?,    // f
            UnitVector3::new(tp, t, t * tp)?,   // g: normalization divides by D
        ];
        Ok(Self { params, vectors })
    }

    pub fn params(&self) -> &AngleParams {
        &self.params
    }

    pub fn vector(&self, label: Label) -> UnitVector3 {
        self.vectors[label.index()]
    }

    pub fn labeled_vectors(&self) -> [(Label, UnitVector3); 7] {
        let mut out = [(Label::A, self.vectors[0]); 7];
        for (i, label) in Label::ALL.into_iter().enumerate() {
            out[i] = (label, self.vectors[i]);
        }
        out
    }

    /// Residuals of the three squared-dot-product identities the
    /// verification chain substitutes:
    /// `|(a.d)^2 - (s s')^2|`, `|(e.g)^2 - t^2/D^2|`, `|(b.g)^2 - t'^2/D^2|`.
    pub fn substitution_residuals(&self) -> [f64; 3] {
        let p = &self.params;
        let ad = self.vector(Label::A).dot(&self.vector(Label::D));
        let eg = self.vector(Label::E).dot(&self.vector(Label::G));
        let bg = self.vector(Label::B).dot(&self.vector(Label::G));
        let d2 = p.d * p.d;
        [
            (ad * ad - (p.sin_theta * p.sin_theta_prime).powi(2)).abs(),
            (eg * eg - p.tan_theta.powi(2) / d2).abs(),
            (bg * bg - p.tan_theta_prime.powi(2) / d2).abs(),
        ]
    }

    /// Orthogonality graph of the seven directions.
    pub fn orthogonality_graph(&self, tol: f64) -> Result<OrthoGraph> {
        let labels = Label::ALL.iter().map(|l| l.to_string()).collect();
        OrthoGraph::build(labels, &self.vectors, tol)
    }
}

/// Undirected orthogonality graph over a labeled direction set, with its
/// 3-cliques (each clique is an orthonormal basis).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthoGraph {
    labels: Vec<String>,
    edges: Vec<(usize, usize)>,
    triangles: Vec<[usize; 3]>,
}

impl OrthoGraph {
    /// Joins two nodes whenever `|dot| <= tol`. The tolerance must lie in
    /// `(0, 1e-6]` so that double-precision trigonometry passes while no
    /// spurious edge appears for generic angles.
    pub fn build(labels: Vec<String>, vectors: &[UnitVector3], tol: f64) -> Result<Self> {
        if !(tol > 0.0 && tol <= MAX_ORTHO_TOL) {
            return Err(Error::ToleranceOutOfRange { tol });
        }
        assert_eq!(
            labels.len(),
            vectors.len(),
            "one label per direction required"
        );
        let n = vectors.len();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if vectors[i].dot(&vectors[j]).abs() <= tol {
                    edges.push((i, j));
                }
            }
        }
        let has = |edges: &[(usize, usize)], i: usize, j: usize| edges.contains(&(i, j));
        let mut triangles = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if !has(&edges, i, j) {
                    continue;
                }
                for k in (j + 1)..n {
                    if has(&edges, i, k) && has(&edges, j, k) {
                        triangles.push([i, j, k]);
                    }
                }
            }
        }
        Ok(Self {
            labels,
            edges,
            triangles,
        })
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        let key = if i < j { (i, j) } else { (j, i) };
        self.edges.contains(&key)
    }

    pub fn degree(&self, node: usize) -> usize {
        self.edges
            .iter()
            .filter(|(i, j)| *i == node || *j == node)
            .count()
    }

    /// Edge list as label pairs, in construction order.
    pub fn edge_labels(&self) -> Vec<(String, String)> {
        self.edges
            .iter()
            .map(|&(i, j)| (self.labels[i].clone(), self.labels[j].clone()))
            .collect()
    }

    /// DOT export: one node statement per label, one undirected edge
    /// statement per orthogonal pair, in construction order.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph orthogonality {\n");
        for label in &self.labels {
            out.push_str(&format!("  {label};\n"));
        }
        for &(i, j) in &self.edges {
            out.push_str(&format!("  {} -- {};\n", self.labels[i], self.labels[j]));
        }
        out.push_str("}\n");
        out
    }
}
