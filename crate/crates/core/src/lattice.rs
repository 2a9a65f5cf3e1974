//! Integer vectors, half-integer points and two-dimensional sublattices of Z².

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IVec2 {
    pub x: i64,
    pub y: i64,
}

impl IVec2 {
    pub const ZERO: IVec2 = IVec2 { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        IVec2 { x, y }
    }

    pub fn dot(self, other: IVec2) -> i64 {
        self.x * other.x + self.y * other.y
    }
}

impl Add for IVec2 {
    type Output = IVec2;
    fn add(self, o: IVec2) -> IVec2 {
        IVec2::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for IVec2 {
    type Output = IVec2;
    fn sub(self, o: IVec2) -> IVec2 {
        IVec2::new(self.x - o.x, self.y - o.y)
    }
}

impl Neg for IVec2 {
    type Output = IVec2;
    fn neg(self) -> IVec2 {
        IVec2::new(-self.x, -self.y)
    }
}

impl Mul<i64> for IVec2 {
    type Output = IVec2;
    fn mul(self, k: i64) -> IVec2 {
        IVec2::new(self.x * k, self.y * k)
    }
}

impl fmt::Display for IVec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Serialize for IVec2 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [self.x, self.y].serialize(s)
    }
}

/// A point of (1/2)Z², stored with doubled coordinates.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfPoint {
    pub x2: i64,
    pub y2: i64,
}

impl HalfPoint {
    pub const fn from_doubled(x2: i64, y2: i64) -> Self {
        HalfPoint { x2, y2 }
    }

    pub fn x(self) -> f64 {
        self.x2 as f64 / 2.0
    }

    pub fn y(self) -> f64 {
        self.y2 as f64 / 2.0
    }

    pub fn translate(self, v: IVec2) -> HalfPoint {
        HalfPoint::from_doubled(self.x2 + 2 * v.x, self.y2 + 2 * v.y)
    }
}

fn fmt_half(v: i64) -> String {
    if v % 2 == 0 {
        format!("{}", v / 2)
    } else {
        format!("{}/2", v)
    }
}

impl fmt::Display for HalfPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", fmt_half(self.x2), fmt_half(self.y2))
    }
}

impl Serialize for HalfPoint {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [self.x(), self.y()].serialize(s)
    }
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

pub fn lcm(a: i64, b: i64) -> i64 {
    if a == 0 || b == 0 {
        0
    } else {
        (a / gcd(a, b) * b).abs()
    }
}

/// Returns `(g, s, t)` with `s*a + t*b == g == gcd(a, b)` and `g >= 0`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1, 0);
    let (mut old_t, mut t) = (0, 1);
    while r != 0 {
        let q = old_r.div_euclid(r);
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Full-rank sublattice of Z² in Hermite normal form.
///
/// The basis is `(a, 0)` and `(b, c)` with `a > 0`, `c > 0` and `0 <= b < a`;
/// as a column matrix this is `[[a, b], [0, c]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Hnf {
    a: i64,
    b: i64,
    c: i64,
}

impl Hnf {
    /// # Panics
    /// If `a` or `c` is not positive.
    pub fn new(a: i64, b: i64, c: i64) -> Self {
        assert!(a > 0 && c > 0, "degenerate lattice basis");
        Hnf { a, b: b.rem_euclid(a), c }
    }

    pub fn integer() -> Self {
        Hnf::new(1, 0, 1)
    }

    pub fn rectangular(width: i64, height: i64) -> Self {
        Hnf::new(width, 0, height)
    }

    /// Lattice spanned by `gens`; `None` when they do not span a full-rank lattice.
    pub fn from_generators<I: IntoIterator<Item = IVec2>>(gens: I) -> Option<Self> {
        let mut pivot: Option<IVec2> = None;
        let mut a = 0i64;
        for w in gens {
            if w.y == 0 {
                a = gcd(a, w.x);
                continue;
            }
            match pivot {
                None => pivot = Some(if w.y < 0 { -w } else { w }),
                Some(p) => {
                    let (g, s, t) = ext_gcd(p.y, w.y);
                    let new_pivot = p * s + w * t;
                    let kernel = p * (w.y / g) - w * (p.y / g);
                    debug_assert_eq!(kernel.y, 0);
                    a = gcd(a, kernel.x);
                    pivot = Some(new_pivot);
                }
            }
        }
        let p = pivot?;
        if a == 0 {
            return None;
        }
        Some(Hnf::new(a, p.x, p.y))
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn c(&self) -> i64 {
        self.c
    }

    pub fn basis(&self) -> [IVec2; 2] {
        [IVec2::new(self.a, 0), IVec2::new(self.b, self.c)]
    }

    /// Column matrix `[[a, b], [0, c]]`.
    pub fn matrix(&self) -> [[i64; 2]; 2] {
        [[self.a, self.b], [0, self.c]]
    }

    /// Index in Z², i.e. the number of cells in a fundamental domain.
    pub fn index(&self) -> i64 {
        self.a * self.c
    }

    pub fn contains(&self, v: IVec2) -> bool {
        self.reduce(v) == IVec2::ZERO
    }

    /// Canonical coset representative in `[0, a) x [0, c)`.
    pub fn reduce(&self, v: IVec2) -> IVec2 {
        let k = v.y.div_euclid(self.c);
        let w = v - IVec2::new(self.b, self.c) * k;
        IVec2::new(w.x.rem_euclid(self.a), w.y)
    }

    /// All canonical representatives of Z² modulo this lattice.
    pub fn transversal(&self) -> impl Iterator<Item = IVec2> + '_ {
        (0..self.c).flat_map(move |y| (0..self.a).map(move |x| IVec2::new(x, y)))
    }

    pub fn is_sublattice_of(&self, other: &Hnf) -> bool {
        self.basis().iter().all(|&v| other.contains(v))
    }

    /// Smallest rectangle `(w, h)` such that `(w, 0)` and `(0, h)` lie in the lattice.
    pub fn rect_block(&self) -> (i64, i64) {
        (self.a, self.c * (self.a / gcd(self.a, self.b)))
    }

    /// Smallest positive `k` with `k * dir` in the lattice.
    pub fn line_period(&self, dir: IVec2) -> i64 {
        (1..=self.index())
            .find(|&k| self.contains(dir * k))
            .expect("every lattice of index n contains n * Z²")
    }

    /// Lattice generated by this one and an extra vector.
    pub fn extend(&self, v: IVec2) -> Hnf {
        let [b0, b1] = self.basis();
        Hnf::from_generators([b0, b1, v]).expect("extension of a full-rank lattice")
    }

    /// Image of the lattice under an integer linear map given by rows.
    pub fn map_linear(&self, m: [[i64; 2]; 2]) -> Option<Hnf> {
        let apply = |v: IVec2| IVec2::new(m[0][0] * v.x + m[0][1] * v.y, m[1][0] * v.x + m[1][1] * v.y);
        let [b0, b1] = self.basis();
        Hnf::from_generators([apply(b0), apply(b1)])
    }
}

impl fmt::Display for Hnf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<({}, 0), ({}, {})>", self.a, self.b, self.c)
    }
}
