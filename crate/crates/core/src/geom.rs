//! Conformal geometry on the unit 3-sphere S³ ⊂ R⁴ and stereographic transfer to R³.
//!
//! Distances on S³ are angular. Every map here works from chord lengths
//! `|p - a|` and `|p + a|` instead of dot products, so points that sit very
//! close to an axis point (or to its antipode) keep their relative precision.
//! A point at angle θ from an axis `a` is carried around as the half-angle
//! pair `(sin θ/2, cos θ/2) = (|p - a|/2, |p + a|/2)` together with the unit
//! tangent direction at `a` pointing toward `p`.

use crate::error::{Error, Result};

/// Largest tolerated deviation of `|p|` from 1 for an input point.
pub const UNIT_NORM_TOL: f64 = 1e-9;

pub(crate) type Vec4 = [f64; 4];

#[inline]
pub(crate) fn dot4(a: &Vec4, b: &Vec4) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]
}

#[inline]
fn sub4(a: &Vec4, b: &Vec4) -> Vec4 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]]
}

#[inline]
fn add4(a: &Vec4, b: &Vec4) -> Vec4 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]]
}

#[inline]
fn scale4(a: &Vec4, s: f64) -> Vec4 {
    [a[0] * s, a[1] * s, a[2] * s, a[3] * s]
}

/// Euclidean norm, scaled so that tiny components do not underflow when squared.
pub(crate) fn norm4(a: &Vec4) -> f64 {
    let m = a.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
    if m == 0.0 || !m.is_finite() {
        return m;
    }
    let s = a.iter().map(|x| (x / m) * (x / m)).sum::<f64>();
    m * s.sqrt()
}

pub(crate) fn norm3(a: &[f64; 3]) -> f64 {
    let m = a.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
    if m == 0.0 || !m.is_finite() {
        return m;
    }
    let s = a.iter().map(|x| (x / m) * (x / m)).sum::<f64>();
    m * s.sqrt()
}

/// A point on the unit sphere S³.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point4(Vec4);

impl Point4 {
    /// Wraps `coords` after checking that they are finite and of unit norm
    /// (within [`UNIT_NORM_TOL`]). Coordinates are stored unchanged.
    pub fn new(coords: Vec4) -> Result<Self> {
        if coords.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidInput(format!("non-finite coordinates {coords:?}")));
        }
        let n = norm4(&coords);
        if (n - 1.0).abs() > UNIT_NORM_TOL {
            return Err(Error::InvalidInput(format!(
                "point {coords:?} is off the unit sphere (norm {n})"
            )));
        }
        Ok(Point4(coords))
    }

    /// Projects a nonzero vector radially onto S³.
    pub fn normalized(v: Vec4) -> Result<Self> {
        let n = norm4(&v);
        if n == 0.0 || !n.is_finite() {
            return Err(Error::InvalidInput(format!("cannot normalize {v:?}")));
        }
        Ok(Point4(scale4(&v, 1.0 / n)))
    }

    /// The `i`-th standard axis point.
    pub fn axis(i: usize) -> Self {
        let mut c = [0.0; 4];
        c[i] = 1.0;
        Point4(c)
    }

    pub fn coords(&self) -> Vec4 {
        self.0
    }

    pub fn antipode(&self) -> Self {
        Point4(scale4(&self.0, -1.0))
    }

    pub fn dot(&self, other: &Point4) -> f64 {
        dot4(&self.0, &other.0)
    }

    /// Renormalizes a vector that is already close to unit length.
    fn renormalized(v: Vec4) -> Self {
        let n = norm4(&v);
        Point4(scale4(&v, 1.0 / n))
    }
}

/// Angular distance in `[0, π]` between two points of S³.
///
/// Uses `2·atan2(|p - q|, |p + q|)`, which keeps relative accuracy for
/// nearly coincident and for nearly antipodal pairs.
pub fn angular_distance(p: &Point4, q: &Point4) -> f64 {
    let minus = norm4(&sub4(&p.0, &q.0));
    let plus = norm4(&add4(&p.0, &q.0));
    2.0 * minus.atan2(plus)
}

fn check_angular_radius(radius: f64) -> Result<()> {
    if !(radius > 0.0 && radius < std::f64::consts::PI) {
        return Err(Error::InvalidInput(format!("angular radius {radius} outside (0, π)")));
    }
    Ok(())
}

/// A closed ball on S³: all points within `radius` (radians) of `center`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphericalBall {
    center: Point4,
    radius: f64,
}

impl SphericalBall {
    pub fn new(center: Point4, radius: f64) -> Result<Self> {
        check_angular_radius(radius)?;
        Ok(SphericalBall { center, radius })
    }

    pub fn center(&self) -> &Point4 {
        &self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn antipode(&self) -> Self {
        SphericalBall {
            center: self.center.antipode(),
            radius: self.radius,
        }
    }
}

/// A round 2-sphere inside S³, given by center and angular radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphericalSphere {
    center: Point4,
    radius: f64,
}

impl SphericalSphere {
    pub fn new(center: Point4, radius: f64) -> Result<Self> {
        check_angular_radius(radius)?;
        Ok(SphericalSphere { center, radius })
    }

    pub fn center(&self) -> &Point4 {
        &self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn antipode(&self) -> Self {
        SphericalSphere {
            center: self.center.antipode(),
            radius: self.radius,
        }
    }

    /// `tan²(radius/2)`: the scale of the inversion in the chart centered at `center`.
    fn inversion_scale(&self) -> f64 {
        let t = (0.5 * self.radius).tan();
        t * t
    }
}

/// A ball in R³.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EuclideanBall {
    center: [f64; 3],
    radius: f64,
}

impl EuclideanBall {
    pub fn new(center: [f64; 3], radius: f64) -> Result<Self> {
        if center.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidInput(format!("non-finite center {center:?}")));
        }
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::InvalidInput(format!("radius {radius} is not positive")));
        }
        Ok(EuclideanBall { center, radius })
    }

    pub fn center(&self) -> &[f64; 3] {
        &self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }
}

pub(crate) fn euclidean_distance(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    norm3(&[a[0] - b[0], a[1] - b[1], a[2] - b[2]])
}

/// Position of a point relative to an axis point on S³.
struct Polar {
    /// sin(θ/2)
    s: f64,
    /// cos(θ/2)
    c: f64,
    /// Unit tangent at the axis, orthogonal to it, pointing toward the point.
    dir: Vec4,
}

/// Fixed fallback direction: the first standard axis not parallel to `axis`,
/// made orthogonal to it.
fn fallback_dir(axis: &Vec4) -> Vec4 {
    for i in 0..4 {
        if axis[i].abs() < 0.9 {
            let mut e = [0.0; 4];
            e[i] = 1.0;
            let v = sub4(&e, &scale4(axis, axis[i]));
            return scale4(&v, 1.0 / norm4(&v));
        }
    }
    unreachable!("a unit vector has at least one small component")
}

fn polar(axis: &Vec4, p: &Vec4) -> Polar {
    let minus = sub4(p, axis);
    let plus = add4(p, axis);
    let nm = norm4(&minus);
    let np = norm4(&plus);
    let h = nm.hypot(np);
    // The tangential part of p equals that of p - a and of p + a; use whichever
    // difference is shorter so the projection does not cancel.
    let e = if nm <= np { minus } else { plus };
    let t = sub4(&e, &scale4(axis, dot4(&e, axis)));
    let nt = norm4(&t);
    let dir = if nt > 0.0 {
        scale4(&t, 1.0 / nt)
    } else {
        fallback_dir(axis)
    };
    Polar {
        s: nm / h,
        c: np / h,
        dir,
    }
}

/// Point at half-angle pair `(s, c)` from `axis` along `dir`.
fn from_polar(axis: &Vec4, dir: &Vec4, s: f64, c: f64) -> Point4 {
    let h = s.hypot(c);
    let (s, c) = (s / h, c / h);
    let v = add4(&scale4(axis, c * c - s * s), &scale4(dir, 2.0 * s * c));
    Point4::renormalized(v)
}

/// Inversion in `sphere`: fixes the sphere pointwise and moves every other
/// point along its great circle through the sphere's center, so that
/// `tan(θ'/2) = tan²(α/2) / tan(θ/2)`. The center and its antipode are swapped.
pub fn invert_point_in_sphere(sphere: &SphericalSphere, p: &Point4) -> Point4 {
    let axis = sphere.center.0;
    let k = sphere.inversion_scale();
    let pol = polar(&axis, &p.0);
    from_polar(&axis, &pol.dir, k * pol.c, pol.s)
}

/// Half-angle pairs of the two points where the great circle through `axis`
/// and the ball's center crosses the ball boundary (near point first).
fn extremal_pairs(pol: &Polar, radius: f64) -> ((f64, f64), (f64, f64)) {
    let (sb, cb) = (0.5 * radius).sin_cos();
    let near = (pol.s * cb - pol.c * sb, pol.c * cb + pol.s * sb);
    let far = (pol.s * cb + pol.c * sb, pol.c * cb - pol.s * sb);
    (near, far)
}

fn invert_ball(sphere: &SphericalSphere, ball: &SphericalBall) -> SphericalBall {
    let axis = sphere.center.0;
    let k = sphere.inversion_scale();
    let pol = polar(&axis, &ball.center.0);
    let (near, far) = extremal_pairs(&pol, ball.radius);

    // In the chart x = tan(θ/2) the inversion is x ↦ k/x, which reverses the
    // orientation of the circle, so the image arc runs from image(far) to image(near).
    // Pairs are (sin, cos) of half-angles, i.e. points of the projective line.
    let start = unit_pair(k * far.1, far.0);
    let mut end = unit_pair(k * near.1, near.0);
    let mut cross = start.1 * end.0 - start.0 * end.1;
    let mut dot = start.1 * end.1 + start.0 * end.0;
    if cross < 0.0 || (cross == 0.0 && dot < 0.0) {
        end = (-end.0, -end.1);
        cross = -cross;
        dot = -dot;
    }
    let radius = cross.atan2(dot);
    let mid = (start.0 + end.0, start.1 + end.1);
    let center = from_polar(&axis, &pol.dir, mid.0, mid.1);
    SphericalBall { center, radius }
}

fn unit_pair(s: f64, c: f64) -> (f64, f64) {
    let h = s.hypot(c);
    (s / h, c / h)
}

/// A conformal self-map of S³ of the form `(I_S ∘ A)^power`, where `A` is the
/// antipodal map when `pre_antipode` is set and the identity otherwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConformalMapS3 {
    pub inversion_sphere: SphericalSphere,
    pub pre_antipode: bool,
    pub power: u32,
}

impl ConformalMapS3 {
    pub fn inversion(sphere: SphericalSphere) -> Self {
        ConformalMapS3 {
            inversion_sphere: sphere,
            pre_antipode: false,
            power: 1,
        }
    }

    /// `p ↦ I_S(-p)`.
    pub fn antipode_then_invert(sphere: SphericalSphere) -> Self {
        ConformalMapS3 {
            inversion_sphere: sphere,
            pre_antipode: true,
            power: 1,
        }
    }

    pub fn identity(sphere: SphericalSphere) -> Self {
        ConformalMapS3 {
            inversion_sphere: sphere,
            pre_antipode: false,
            power: 0,
        }
    }

    pub fn pow(self, power: u32) -> Self {
        ConformalMapS3 {
            power: self.power * power,
            ..self
        }
    }

    pub fn apply_point(&self, p: &Point4) -> Point4 {
        let mut q = *p;
        for _ in 0..self.power {
            if self.pre_antipode {
                q = q.antipode();
            }
            q = invert_point_in_sphere(&self.inversion_sphere, &q);
        }
        q
    }

    pub fn apply_ball(&self, ball: &SphericalBall) -> SphericalBall {
        let mut b = *ball;
        for _ in 0..self.power {
            if self.pre_antipode {
                b = b.antipode();
            }
            b = invert_ball(&self.inversion_sphere, &b);
        }
        b
    }
}

/// Applies a conformal map to a ball. Power 0 returns the input unchanged.
pub fn apply_conformal_to_ball(map: &ConformalMapS3, ball: &SphericalBall) -> SphericalBall {
    map.apply_ball(ball)
}

/// Stereographic projection from `pole` onto the hyperplane `pole⊥ ≅ R³`.
///
/// The antipode of the pole maps to the origin and the equator `x·pole = 0`
/// is fixed. Coordinates in `pole⊥` are taken in an orthonormal basis obtained
/// by Gram–Schmidt on the three standard axes other than the one most
/// parallel to the pole.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StereographicChart {
    pole: Point4,
    basis: [Vec4; 3],
}

impl StereographicChart {
    pub fn new(pole: Point4) -> Self {
        let p = pole.0;
        let skip = (0..4)
            .max_by(|&i, &j| p[i].abs().total_cmp(&p[j].abs()).then(j.cmp(&i)))
            .expect("four axes");
        let mut basis: Vec<Vec4> = Vec::with_capacity(3);
        for i in (0..4).filter(|&i| i != skip) {
            let mut v = [0.0; 4];
            v[i] = 1.0;
            v = sub4(&v, &scale4(&p, p[i]));
            for e in &basis {
                v = sub4(&v, &scale4(e, dot4(&v, e)));
            }
            let n = norm4(&v);
            basis.push(scale4(&v, 1.0 / n));
        }
        StereographicChart {
            pole,
            basis: [basis[0], basis[1], basis[2]],
        }
    }

    pub fn pole(&self) -> &Point4 {
        &self.pole
    }

    fn coords(&self, v: &Vec4) -> [f64; 3] {
        [
            dot4(v, &self.basis[0]),
            dot4(v, &self.basis[1]),
            dot4(v, &self.basis[2]),
        ]
    }

    /// `(x - (x·N)N) / (1 - x·N)` in basis coordinates.
    pub fn project_point(&self, x: &Point4) -> Result<[f64; 3]> {
        let origin = self.pole.antipode().0;
        let pol = polar(&origin, &x.0);
        if pol.c <= 0.0 {
            return Err(Error::InvalidInput("cannot project the pole itself".into()));
        }
        let y = pol.s / pol.c;
        Ok(self.coords(&scale4(&pol.dir, y)))
    }

    /// Image of a ball that stays away from the pole.
    pub fn project_ball(&self, ball: &SphericalBall) -> Result<EuclideanBall> {
        let dist = angular_distance(&self.pole, &ball.center);
        if dist <= ball.radius + 1e-12 {
            return Err(Error::PoleInBall {
                distance: dist,
                radius: ball.radius,
            });
        }
        let origin = self.pole.antipode().0;
        let pol = polar(&origin, &ball.center.0);
        let (near, far) = extremal_pairs(&pol, ball.radius);
        // Chart coordinates of the extremal points are near.0/near.1 and far.0/far.1;
        // their half-sum and half-difference are rewritten to avoid cancellation.
        let denom = 2.0 * near.1 * far.1;
        let mid = 2.0 * pol.s * pol.c / denom;
        let radius = ball.radius.sin() / denom;
        EuclideanBall::new(self.coords(&scale4(&pol.dir, mid)), radius)
    }

    /// Inverse of [`project_point`](Self::project_point).
    pub fn lift_point(&self, y: &[f64; 3]) -> Point4 {
        let mut v = [0.0; 4];
        for (k, e) in self.basis.iter().enumerate() {
            v = add4(&v, &scale4(e, y[k]));
        }
        let r2 = y.iter().map(|t| t * t).sum::<f64>();
        let w = add4(
            &scale4(&v, 2.0 / (1.0 + r2)),
            &scale4(&self.pole.0, (r2 - 1.0) / (r2 + 1.0)),
        );
        Point4::renormalized(w)
    }
}

/// Stereographic image of a point from `pole`.
pub fn stereographic_project_point(pole: &Point4, x: &Point4) -> Result<[f64; 3]> {
    StereographicChart::new(*pole).project_point(x)
}

/// Stereographic image of a ball from `pole`.
pub fn stereographic_project_ball(pole: &Point4, ball: &SphericalBall) -> Result<EuclideanBall> {
    StereographicChart::new(*pole).project_ball(ball)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn deg(x: f64) -> f64 {
        x.to_radians()
    }

    fn along(axis: &Point4, dir: &Vec4, theta: f64) -> Point4 {
        Point4::normalized(add4(&scale4(&axis.0, theta.cos()), &scale4(dir, theta.sin()))).unwrap()
    }

    fn s_radius() -> f64 {
        let tau = (1.0 + 5f64.sqrt()) / 2.0;
        ((2.0 + tau) / 5.0).sqrt().acos()
    }

    #[test]
    fn distance_examples() {
        let e1 = Point4::axis(0);
        let e2 = Point4::axis(1);
        assert!((angular_distance(&e1, &e2) - FRAC_PI_2).abs() < 1e-15);
        assert_eq!(angular_distance(&e1, &e1), 0.0);
        assert!((angular_distance(&e1, &e1.antipode()) - PI).abs() < 1e-15);
    }

    #[test]
    fn distance_keeps_relative_accuracy_for_tiny_angles() {
        let b = Point4::axis(0);
        let dir = [0.0, 0.6, 0.8, 0.0];
        for &eps in &[1e-8, 1e-30, 1e-100, 1e-200] {
            let p = along(&b, &dir, eps);
            let d = angular_distance(&b, &p);
            assert!(((d - eps) / eps).abs() < 1e-14, "eps {eps}: got {d}");
        }
    }

    #[test]
    fn off_sphere_point_rejected() {
        assert!(Point4::new([1.0, 1e-3, 0.0, 0.0]).is_err());
        assert!(Point4::new([1.0, 1e-5, 0.0, 0.0]).is_ok());
        assert!(Point4::new([f64::NAN, 0.0, 0.0, 0.0]).is_err());
    }

    #[test]
    fn ball_radius_bounds() {
        let c = Point4::axis(0);
        assert!(SphericalBall::new(c, 0.0).is_err());
        assert!(SphericalBall::new(c, PI).is_err());
        assert!(SphericalBall::new(c, 0.3).is_ok());
        assert!(EuclideanBall::new([0.0; 3], -1.0).is_err());
    }

    #[test]
    fn inversion_fixes_sphere_and_swaps_center() {
        let c = Point4::normalized([0.2, -0.4, 0.5, 0.7]).unwrap();
        let s = SphericalSphere::new(c, 0.7).unwrap();
        let dir = fallback_dir(&c.0);
        let p = along(&c, &dir, 0.7);
        let q = invert_point_in_sphere(&s, &p);
        assert!(angular_distance(&p, &q) < 1e-14);
        let q = invert_point_in_sphere(&s, &c);
        assert!(angular_distance(&q, &c.antipode()) < 1e-15);
        let q = invert_point_in_sphere(&s, &c.antipode());
        assert!(angular_distance(&q, &c) < 1e-15);
    }

    #[test]
    fn inversion_sixty_degrees() {
        // Frozen from an independent high-precision evaluation (stereographic
        // chart from a generic pole plus Euclidean inversion).
        let b = Point4::axis(0);
        let s = SphericalSphere::new(b, s_radius()).unwrap();
        let dir = [0.0, 0.6, 0.8, 0.0];
        let p = along(&b, &dir, deg(60.0));
        let q = invert_point_in_sphere(&s, &p);
        let theta = angular_distance(&b, &q).to_degrees();
        assert!((theta - 15.914_276_974_530_01).abs() < 1e-10, "{theta}");
        // same side of the great circle
        assert!(dot4(&q.0, &dir) > 0.0);
    }

    #[test]
    fn sigma_on_sixty_degree_ball() {
        let b = Point4::axis(0);
        let s = SphericalSphere::new(b, s_radius()).unwrap();
        let sigma = ConformalMapS3::antipode_then_invert(s);
        let dir = [0.0, 0.6, 0.8, 0.0];
        let ball = SphericalBall::new(along(&b, &dir, deg(60.0)), deg(18.0)).unwrap();
        let img = sigma.apply_ball(&ball);
        let d = angular_distance(&b, img.center()).to_degrees();
        assert!((d - 5.513_331_157_104_817).abs() < 1e-10, "{d}");
        assert!((img.radius().to_degrees() - 1.964_628_743_886_122).abs() < 1e-10);
    }

    #[test]
    fn identity_map_is_bit_identical() {
        let s = SphericalSphere::new(Point4::axis(0), 0.5).unwrap();
        let ball = SphericalBall::new(Point4::normalized([0.1, 0.2, 0.3, 0.4]).unwrap(), 0.123).unwrap();
        let id = ConformalMapS3::identity(s);
        assert_eq!(id.apply_ball(&ball), ball);
        assert_eq!(apply_conformal_to_ball(&id, &ball), ball);
    }

    #[test]
    fn sigma_fixes_center_and_antipode() {
        let b = Point4::normalized([0.3, 0.1, -0.5, 0.8]).unwrap();
        let s = SphericalSphere::new(b, s_radius()).unwrap();
        let sigma = ConformalMapS3::antipode_then_invert(s);
        assert!(angular_distance(&sigma.apply_point(&b), &b) < 1e-12);
        assert!(angular_distance(&sigma.apply_point(&b.antipode()), &b.antipode()) < 1e-12);
    }

    #[test]
    fn ball_containing_inversion_center() {
        // A ball around the inversion center maps to a ball around the antipode.
        let c = Point4::axis(0);
        let s = SphericalSphere::new(c, 0.5).unwrap();
        let ball = SphericalBall::new(c, 0.2).unwrap();
        let img = ConformalMapS3::inversion(s).apply_ball(&ball);
        assert!(angular_distance(img.center(), &c.antipode()) < 1e-12);
        // boundary angle 0.2 maps to 2·atan(tan²(0.25)/tan(0.1))
        let expect = PI - 2.0 * ((0.25f64).tan().powi(2) / 0.1f64.tan()).atan();
        assert!((img.radius() - expect).abs() < 1e-12);

        // off-center ball that still contains the center
        let dir = [0.0, 1.0, 0.0, 0.0];
        let ball = SphericalBall::new(along(&c, &dir, 0.1), 0.3).unwrap();
        let img = ConformalMapS3::inversion(s).apply_ball(&ball);
        let back = ConformalMapS3::inversion(s).apply_ball(&img);
        assert!(angular_distance(back.center(), ball.center()) < 1e-12);
        assert!((back.radius() - ball.radius()).abs() < 1e-12);
    }

    #[test]
    fn projection_examples() {
        let pole = Point4::normalized([0.1, -0.7, 0.2, 0.4]).unwrap();
        let chart = StereographicChart::new(pole);
        let y = chart.project_point(&pole.antipode()).unwrap();
        assert!(norm3(&y) < 1e-15);
        assert!(chart.project_point(&pole).is_err());
        // equatorial points are fixed: coordinates equal the basis expansion
        let e = chart.lift_point(&[0.6, 0.0, 0.8]);
        assert!(e.dot(&pole).abs() < 1e-15);
        let y = chart.project_point(&e).unwrap();
        assert!((y[0] - 0.6).abs() < 1e-15 && y[1].abs() < 1e-15 && (y[2] - 0.8).abs() < 1e-15);
    }

    #[test]
    fn axis_pole_basis_is_remaining_axes() {
        let chart = StereographicChart::new(Point4::axis(0).antipode());
        let x = Point4::normalized([0.0, 0.0, 1.0, 0.0]).unwrap();
        assert_eq!(chart.project_point(&x).unwrap(), [0.0, 1.0, 0.0]);
    }

    #[test]
    fn projected_ball_matches_projected_boundary_points() {
        let pole = Point4::normalized([0.5, 0.5, -0.5, 0.5]).unwrap();
        let chart = StereographicChart::new(pole);
        let center = Point4::normalized([0.9, 0.1, 0.3, -0.2]).unwrap();
        let ball = SphericalBall::new(center, 0.4).unwrap();
        let img = chart.project_ball(&ball).unwrap();
        // boundary points in several directions land on the image sphere
        for i in 0..4 {
            let dir = fallback_dir(&center.0);
            let mut d = dir;
            d[i] += 0.3;
            let t = sub4(&d, &scale4(&center.0, dot4(&d, &center.0)));
            let t = scale4(&t, 1.0 / norm4(&t));
            let q = along(&center, &t, 0.4);
            let y = chart.project_point(&q).unwrap();
            let r = euclidean_distance(&y, img.center());
            assert!((r - img.radius()).abs() < 1e-12 * img.radius().max(1.0));
        }
    }

    #[test]
    fn pole_inside_ball_rejected() {
        let pole = Point4::axis(0);
        let ball = SphericalBall::new(along(&pole, &[0.0, 1.0, 0.0, 0.0], 0.3), 0.31).unwrap();
        assert!(matches!(
            StereographicChart::new(pole).project_ball(&ball),
            Err(Error::PoleInBall { .. })
        ));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn unit4() -> impl Strategy<Value = Point4> {
            prop::array::uniform4(-1.0f64..1.0)
                .prop_filter("nonzero", |v| norm4(v) > 1e-3)
                .prop_map(|v| Point4::normalized(v).unwrap())
        }

        proptest! {
            #[test]
            fn inversion_is_an_involution(c in unit4(), p in unit4(), alpha in 0.05f64..3.0) {
                let s = SphericalSphere::new(c, alpha).unwrap();
                let q = invert_point_in_sphere(&s, &invert_point_in_sphere(&s, &p));
                prop_assert!(angular_distance(&p, &q) < 1e-9);
            }

            #[test]
            fn sigma_maps_antipodal_sphere_onto_sphere(c in unit4(), p in unit4(), alpha in 0.05f64..1.5) {
                let s = SphericalSphere::new(c, alpha).unwrap();
                // a point of -S: at distance alpha from -c
                let pol = polar(&c.antipode().0, &p.0);
                let q = along(&c.antipode(), &pol.dir, alpha);
                let img = ConformalMapS3::antipode_then_invert(s).apply_point(&q);
                prop_assert!((angular_distance(&c, &img) - alpha).abs() < 1e-9);
            }

            #[test]
            fn tangency_survives_inversion(c in unit4(), p in unit4(), q in unit4(),
                                           alpha in 0.1f64..2.5, frac in 0.1f64..0.9) {
                let d = angular_distance(&p, &q);
                prop_assume!(d > 0.05 && d < 3.0);
                prop_assume!(angular_distance(&c, &p) > 0.05 && angular_distance(&c, &q) > 0.05);
                let r1 = d * frac;
                let r2 = d - r1;
                let b1 = SphericalBall::new(p, r1).unwrap();
                let b2 = SphericalBall::new(q, r2).unwrap();
                let m = ConformalMapS3::inversion(SphericalSphere::new(c, alpha).unwrap());
                let i1 = m.apply_ball(&b1);
                let i2 = m.apply_ball(&b2);
                let gap = angular_distance(i1.center(), i2.center()) - (i1.radius() + i2.radius());
                let t0 = (d - (r1 + r2)).abs().max(1e-15) / (r1 + r2);
                prop_assert!(gap.abs() <= 10.0 * t0.max(1e-11) * (i1.radius() + i2.radius()),
                    "gap {gap}");
            }

            #[test]
            fn projected_ball_boundary_consistent(pole in unit4(), c in unit4(), r in 0.01f64..1.0) {
                prop_assume!(angular_distance(&pole, &c) > r + 0.05);
                let chart = StereographicChart::new(pole);
                let img = chart.project_ball(&SphericalBall::new(c, r).unwrap()).unwrap();
                let dir = polar(&c.0, &pole.0).dir;
                for sign in [-1.0, 1.0] {
                    let q = along(&c, &scale4(&dir, sign), r);
                    let y = chart.project_point(&q).unwrap();
                    let e = euclidean_distance(&y, img.center()) - img.radius();
                    prop_assert!(e.abs() <= 1e-9 * img.radius().max(1.0));
                }
            }
        }
    }
}
