//! Volume of the convex hull of {(x₁x₂x₃, x₁, x₂, x₃) : x ∈ box} in R⁴.
//!
//! The hull is swept along x₃: its slice at x₃ = t is a Minkowski
//! combination of two tetrahedra Q (the slice at a₃) and R (the slice at
//! b₃), both living in (y, x₁, x₂) coordinates. The slice volume is a cubic
//! in t whose Bernstein coefficients are Vol(Q), 3V(Q,Q,R), 3V(Q,R,R) and
//! Vol(R); integrating it gives the 4-volume.
//!
//! Indices are 0-based in code: `a[0]` is a₁.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::geometry::{orient, support, tetra_volume, Point, Point3, Point4, Tetrahedron, Vector3};
use crate::mixed_volume::mixed_volume_against;
use crate::rational::{int, Rational};

/// Bounds aᵢ ≤ xᵢ ≤ bᵢ with 0 ≤ aᵢ < bᵢ.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Box3Bounds {
    a: [Rational; 3],
    b: [Rational; 3],
}

impl Box3Bounds {
    pub fn new(a: [Rational; 3], b: [Rational; 3]) -> Result<Self> {
        for i in 0..3 {
            if a[i].is_negative() {
                return Err(Error::InvalidBounds(format!("a{} = {} is negative", i + 1, a[i])));
            }
            if a[i] >= b[i] {
                return Err(Error::InvalidBounds(format!("a{0} = {1} is not below b{0} = {2}", i + 1, a[i], b[i])));
            }
        }
        Ok(Self { a, b })
    }

    pub fn from_ints(a: [i64; 3], b: [i64; 3]) -> Result<Self> {
        Self::new(a.map(int), b.map(int))
    }

    pub fn a(&self) -> &[Rational; 3] {
        &self.a
    }

    pub fn b(&self) -> &[Rational; 3] {
        &self.b
    }

    /// Relabels the variables: position i of the result holds the original
    /// variable `perm[i]`.
    pub fn permuted(&self, perm: [usize; 3]) -> Self {
        Self { a: perm.map(|p| self.a[p].clone()), b: perm.map(|p| self.b[p].clone()) }
    }

    /// Multiplies every bound by `s > 0`.
    pub fn scaled(&self, s: &Rational) -> Result<Self> {
        Self::new(self.a.clone().map(|x| x * s), self.b.clone().map(|x| x * s))
    }

    /// 𝒪ᵢ = aᵢbⱼbₖ + bᵢaⱼaₖ for {i, j, k} = {1, 2, 3}.
    pub fn omega_keys(&self) -> [Rational; 3] {
        std::array::from_fn(|i| {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            &self.a[i] * &self.b[j] * &self.b[k] + &self.b[i] * &self.a[j] * &self.a[k]
        })
    }
}

/// Bounds relabeled so that 𝒪₁ ≤ 𝒪₂ ≤ 𝒪₃.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaBox {
    bounds: Box3Bounds,
    perm: [usize; 3],
    keys: [Rational; 3],
}

impl OmegaBox {
    /// Accepts bounds that already satisfy the ordering, keeping their labels.
    pub fn new(bounds: Box3Bounds) -> Result<Self> {
        if !omega_check(&bounds) {
            return Err(Error::OmegaViolated);
        }
        let keys = bounds.omega_keys();
        Ok(Self { bounds, perm: [0, 1, 2], keys })
    }

    pub fn bounds(&self) -> &Box3Bounds {
        &self.bounds
    }

    /// `perm[i]` is the 0-based original index now at position i.
    pub fn perm(&self) -> [usize; 3] {
        self.perm
    }

    /// 𝒪 values of the original labeling.
    pub fn keys(&self) -> &[Rational; 3] {
        &self.keys
    }
}

/// Stable sort of the variables by 𝒪ᵢ.
pub fn omega_normalize(bounds: &Box3Bounds) -> OmegaBox {
    let keys = bounds.omega_keys();
    let mut perm = [0, 1, 2];
    perm.sort_by(|&i, &j| keys[i].cmp(&keys[j]));
    OmegaBox { bounds: bounds.permuted(perm), perm, keys }
}

/// a₁b₂b₃ + b₁a₂a₃ ≤ b₁a₂b₃ + a₁b₂a₃ ≤ b₁b₂a₃ + a₁a₂b₃
pub fn omega_check(bounds: &Box3Bounds) -> bool {
    let [o1, o2, o3] = bounds.omega_keys();
    o1 <= o2 && o2 <= o3
}

/// a₁/b₁ ≤ a₂/b₂ ≤ a₃/b₃, cross-multiplied.
pub fn omega_prime_check(bounds: &Box3Bounds) -> bool {
    let (a, b) = (&bounds.a, &bounds.b);
    &a[0] * &b[1] <= &a[1] * &b[0] && &a[1] * &b[2] <= &a[2] * &b[1]
}

/// b₁a₂ − a₁b₂ ≥ 0, b₁a₃ − a₁b₃ ≥ 0, b₂a₃ − a₂b₃ ≥ 0.
pub fn omega_dprime_check(bounds: &Box3Bounds) -> bool {
    let (a, b) = (&bounds.a, &bounds.b);
    let nonneg = |i: usize, j: usize| !(&b[i] * &a[j] - &a[i] * &b[j]).is_negative();
    nonneg(0, 1) && nonneg(0, 2) && nonneg(1, 2)
}

fn slice_vertices(bounds: &Box3Bounds, x3: &Rational) -> [Point3; 4] {
    let (a, b) = (&bounds.a, &bounds.b);
    let v = |x1: &Rational, x2: &Rational| Point::new([x1 * x2 * x3, x1.clone(), x2.clone()]);
    [v(&b[0], &b[1]), v(&a[0], &a[1]), v(&b[0], &a[1]), v(&a[0], &b[1])]
}

/// The four (y, x₁, x₂) points of the hull at x₃ = a₃, in display order.
pub fn q_vertices(bounds: &Box3Bounds) -> [Point3; 4] {
    slice_vertices(bounds, &bounds.a[2])
}

/// The four (y, x₁, x₂) points of the hull at x₃ = b₃, in display order.
pub fn r_vertices(bounds: &Box3Bounds) -> [Point3; 4] {
    slice_vertices(bounds, &bounds.b[2])
}

/// Q as an oriented tetrahedron; flat (and rejected) when a₃ = 0.
pub fn build_q(ob: &OmegaBox) -> Result<Tetrahedron> {
    orient(q_vertices(&ob.bounds))
}

pub fn build_r(ob: &OmegaBox) -> Result<Tetrahedron> {
    orient(r_vertices(&ob.bounds))
}

/// (b₁ − a₁)(b₂ − a₂)/2, the common length factor of the facet normals of
/// Q and R.
pub fn normal_prefactor(bounds: &Box3Bounds) -> Rational {
    (&bounds.b[0] - &bounds.a[0]) * (&bounds.b[1] - &bounds.a[1]) / int(2)
}

/// The i-th facet normal (1..=4 for Q, 5..=8 for R) with the prefactor
/// divided out.
pub fn unit_facet_normal(i: usize, bounds: &Box3Bounds) -> Result<Vector3> {
    let (a, b) = (&bounds.a, &bounds.b);
    let x3 = match i {
        1..=4 => &a[2],
        5..=8 => &b[2],
        _ => return Err(Error::LemmaIndex(i)),
    };
    let (s, p, q) = match (i - 1) % 4 {
        0 => (1, &a[1], &b[0]),
        1 => (1, &b[1], &a[0]),
        2 => (-1, &b[1], &b[0]),
        _ => (-1, &a[1], &a[0]),
    };
    let s = int(s);
    Ok(Point::new([s.clone(), -&s * p * x3, -&s * q * x3]))
}

/// The four-way maximum h(u) of the opposite tetrahedron over the i-th
/// normal, found by enumerating its vertices.
pub fn support_max_generic(i: usize, bounds: &Box3Bounds) -> Result<Rational> {
    let u = unit_facet_normal(i, bounds)?;
    let body = if i <= 4 { r_vertices(bounds) } else { q_vertices(bounds) };
    support(&body, &u)
}

/// The winning term zᵢ of the four-way support maximum, in closed form.
/// Only valid when the labeling condition holds.
pub fn support_max_z(i: usize, bounds: &Box3Bounds) -> Result<Rational> {
    if !(1..=8).contains(&i) {
        return Err(Error::LemmaIndex(i));
    }
    if !omega_check(bounds) {
        return Err(Error::OmegaViolated);
    }
    Ok(z_closed_form(i, bounds))
}

fn z_closed_form(i: usize, bounds: &Box3Bounds) -> Rational {
    let [a1, a2, a3] = &bounds.a;
    let [b1, b2, b3] = &bounds.b;
    let two = int(2);
    match i {
        1 => b1 * b2 * b3 - b1 * a2 * a3 - b1 * b2 * a3,
        2 => b1 * b2 * b3 - a1 * b2 * a3 - b1 * b2 * a3,
        3 => a1 * b2 * a3 + b1 * b2 * a3 - a1 * b2 * b3,
        4 => &two * a1 * a2 * a3 - a1 * a2 * b3,
        5 => a1 * a2 * a3 - a1 * a2 * b3 - b1 * a2 * b3,
        6 => a1 * a2 * a3 - a1 * a2 * b3 - a1 * b2 * b3,
        7 => &two * b1 * b2 * b3 - b1 * b2 * a3,
        8 => a1 * a2 * b3 + b1 * a2 * b3 - b1 * a2 * a3,
        _ => unreachable!(),
    }
}

/// Vol(Q) = a₃(b₁ − a₁)²(b₂ − a₂)²/6
pub fn vol_q_formula(bounds: &Box3Bounds) -> Rational {
    slice_volume_formula(bounds, &bounds.a[2])
}

/// Vol(R) = b₃(b₁ − a₁)²(b₂ − a₂)²/6
pub fn vol_r_formula(bounds: &Box3Bounds) -> Rational {
    slice_volume_formula(bounds, &bounds.b[2])
}

fn slice_volume_formula(bounds: &Box3Bounds, x3: &Rational) -> Rational {
    let w1 = &bounds.b[0] - &bounds.a[0];
    let w2 = &bounds.b[1] - &bounds.a[1];
    x3 * &w1 * &w1 * &w2 * &w2 / int(6)
}

/// (V(Q,Q,R), V(Q,R,R)) from the closed-form support maxima. The
/// expressions stay valid at a₃ = 0, where Q is flat.
pub fn mixed_volumes_qr(ob: &OmegaBox) -> (Rational, Rational) {
    let b = &ob.bounds;
    let pre = normal_prefactor(b) / int(3);
    let sum = |r: std::ops::RangeInclusive<usize>| r.map(|i| z_closed_form(i, b)).sum::<Rational>();
    (&pre * sum(1..=4), &pre * sum(5..=8))
}

/// (b₁−a₁)(b₂−a₂)((b₁−a₁)(b₂b₃−a₂a₃) + (b₃−a₃)(b₁b₂−a₁a₂))/6, the common
/// value of both mixed volumes.
pub fn mixed_volume_closed_form(bounds: &Box3Bounds) -> Rational {
    let [a1, a2, a3] = &bounds.a;
    let [b1, b2, b3] = &bounds.b;
    (b1 - a1) * (b2 - a2) * ((b1 - a1) * (b2 * b3 - a2 * a3) + (b3 - a3) * (b1 * b2 - a1 * a2)) / int(6)
}

/// ∫ₐᵇ Σₖ wₖ (b−t)^{d−k} (t−a)^k dt / (b−a)^d for a degree-d Bernstein
/// integrand, using ∫(b−t)^{d−k}(t−a)^k dt = (b−a)^{d+1} k!(d−k)!/(d+1)!.
///
/// The three-variable sweep uses d = 3; longer products would feed higher
/// degrees through the same routine.
pub fn integrate_bernstein(weights: &[Rational], a: &Rational, b: &Rational) -> Result<Rational> {
    if a >= b {
        return Err(Error::InvalidBounds(format!("integration interval [{a}, {b}] is empty")));
    }
    let d = weights.len().checked_sub(1).ok_or_else(|| Error::InvalidBounds("no weights".into()))?;
    let fact = |n: usize| -> Rational { (1..=n as i64).map(int).product() };
    let total: Rational = weights.iter().enumerate().map(|(k, w)| w * fact(k) * fact(d - k)).sum();
    Ok(total * (b - a) / fact(d + 1))
}

/// 4-volume from the slice data: integrates the Bernstein cubic with
/// coefficients (Vol(Q), 3V(Q,Q,R), 3V(Q,R,R), Vol(R)) over [a₃, b₃].
pub fn integrate_cross_sections(
    vol_q: &Rational,
    v_qqr: &Rational,
    v_qrr: &Rational,
    vol_r: &Rational,
    a3: &Rational,
    b3: &Rational,
) -> Result<Rational> {
    let three = int(3);
    integrate_bernstein(&[vol_q.clone(), &three * v_qqr, &three * v_qrr, vol_r.clone()], a3, b3)
}

/// Same integral by one panel of Simpson's rule, exact for cubics.
pub fn integrate_cross_sections_simpson(
    vol_q: &Rational,
    v_qqr: &Rational,
    v_qrr: &Rational,
    vol_r: &Rational,
    a3: &Rational,
    b3: &Rational,
) -> Result<Rational> {
    if a3 >= b3 {
        return Err(Error::InvalidBounds(format!("integration interval [{a3}, {b3}] is empty")));
    }
    // slice volume at the midpoint: all Bernstein basis terms equal 1/8
    let three = int(3);
    let mid = (vol_q + &three * v_qqr + &three * v_qrr + vol_r) / int(8);
    Ok((b3 - a3) * (vol_q + mid * int(4) + vol_r) / int(6))
}

/// The volume formula evaluated on the bounds exactly as labeled.
pub fn volume_formula_raw(bounds: &Box3Bounds) -> Rational {
    let [a1, a2, a3] = &bounds.a;
    let [b1, b2, b3] = &bounds.b;
    let five = int(5);
    let three = int(3);
    let head = (b1 - a1) * (b2 - a2) * (b3 - a3);
    let tail = b1 * (&five * b2 * b3 - a2 * b3 - b2 * a3 - &three * a2 * a3)
        + a1 * (&five * a2 * a3 - b2 * a3 - a2 * b3 - &three * b2 * b3);
    head * tail / int(24)
}

/// Closed-form 4-volume of the hull; relabels the variables first.
pub fn closed_form_volume(bounds: &Box3Bounds) -> Rational {
    volume_formula_raw(omega_normalize(bounds).bounds())
}

/// Slice and mixed-volume data behind a pipeline evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Intermediates {
    pub vol_q: Rational,
    pub vol_r: Rational,
    pub v_qqr: Rational,
    pub v_qrr: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VolumeReport {
    pub bounds: Box3Bounds,
    pub normalized: OmegaBox,
    pub vol_formula: Rational,
    pub vol_pipeline: Rational,
    pub vol_oracle: Option<Rational>,
    pub intermediates: Intermediates,
    /// Names of internal cross-checks that failed (determinant vs formula,
    /// closed-form vs enumerated support, analytic vs Simpson).
    pub internal_mismatches: Vec<&'static str>,
    pub agree: bool,
}

impl VolumeReport {
    pub fn with_oracle(mut self, vol: Rational) -> Self {
        self.vol_oracle = Some(vol);
        self.agree = self.compute_agree();
        self
    }

    fn compute_agree(&self) -> bool {
        self.internal_mismatches.is_empty()
            && self.vol_formula == self.vol_pipeline
            && self.vol_oracle.as_ref().is_none_or(|v| *v == self.vol_formula)
    }
}

/// Runs the slice pipeline end to end and compares it with the closed form.
///
/// Every quantity with two derivations is computed both ways. At a₃ = 0
/// the flat Q is never built; its volume is 0 and the mixed volumes come
/// from the closed-form support maxima.
pub fn pipeline_volume(bounds: &Box3Bounds) -> Result<VolumeReport> {
    let ob = omega_normalize(bounds);
    let nb = ob.bounds();
    let mut mismatches = Vec::new();

    let vol_q = vol_q_formula(nb);
    let vol_r = vol_r_formula(nb);
    let (v_qqr, v_qrr) = mixed_volumes_qr(&ob);

    let r = build_r(&ob)?;
    if tetra_volume(&r) != vol_r {
        mismatches.push("Vol(R) determinant");
    }
    if mixed_volume_against(&r, &q_vertices(nb))? != v_qrr {
        mismatches.push("V(Q,R,R) support enumeration");
    }
    if !nb.a()[2].is_zero() {
        let q = build_q(&ob)?;
        if tetra_volume(&q) != vol_q {
            mismatches.push("Vol(Q) determinant");
        }
        if mixed_volume_against(&q, &r_vertices(nb))? != v_qqr {
            mismatches.push("V(Q,Q,R) support enumeration");
        }
    }

    let (a3, b3) = (&nb.a()[2], &nb.b()[2]);
    let vol_pipeline = integrate_cross_sections(&vol_q, &v_qqr, &v_qrr, &vol_r, a3, b3)?;
    if cfg!(debug_assertions)
        && integrate_cross_sections_simpson(&vol_q, &v_qqr, &v_qrr, &vol_r, a3, b3)? != vol_pipeline
    {
        mismatches.push("Simpson integration");
    }

    let vol_formula = volume_formula_raw(nb);
    let mut report = VolumeReport {
        bounds: bounds.clone(),
        normalized: ob,
        vol_formula,
        vol_pipeline,
        vol_oracle: None,
        intermediates: Intermediates { vol_q, vol_r, v_qqr, v_qrr },
        internal_mismatches: mismatches,
        agree: false,
    };
    report.agree = report.compute_agree();
    Ok(report)
}

/// The 8 points (x₁x₂x₃, x₁, x₂, x₃) with each xᵢ at a bound, ordered
/// lexicographically by the choice vector (lower bound first, x₁ slowest).
pub fn extreme_points(bounds: &Box3Bounds) -> [Point4; 8] {
    std::array::from_fn(|m| {
        let x: [Rational; 3] = std::array::from_fn(|i| {
            if (m >> (2 - i)) & 1 == 0 {
                bounds.a[i].clone()
            } else {
                bounds.b[i].clone()
            }
        });
        Point::new([&x[0] * &x[1] * &x[2], x[0].clone(), x[1].clone(), x[2].clone()])
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::facet_normal_set;
    use crate::rational::ratio;

    fn bx(a: [i64; 3], b: [i64; 3]) -> Box3Bounds {
        Box3Bounds::from_ints(a, b).unwrap()
    }

    #[test]
    fn rejects_bad_bounds() {
        assert!(matches!(Box3Bounds::from_ints([1, 0, 0], [1, 1, 1]), Err(Error::InvalidBounds(_))));
        assert!(matches!(Box3Bounds::from_ints([-1, 0, 0], [1, 1, 1]), Err(Error::InvalidBounds(_))));
        assert!(matches!(Box3Bounds::from_ints([0, 2, 0], [1, 1, 1]), Err(Error::InvalidBounds(_))));
    }

    #[test]
    fn normalize_examples() {
        let ob = omega_normalize(&bx([0, 0, 0], [1, 1, 1]));
        assert_eq!(ob.perm(), [0, 1, 2]);

        let ob = omega_normalize(&bx([0, 1, 2], [1, 2, 3]));
        assert_eq!(ob.keys(), &[int(2), int(3), int(4)]);
        assert_eq!(ob.perm(), [0, 1, 2]);

        let rev = bx([2, 1, 0], [3, 2, 1]);
        let ob = omega_normalize(&rev);
        assert_eq!(ob.perm(), [2, 1, 0]);
        assert_eq!(ob.bounds(), &bx([0, 1, 2], [1, 2, 3]));
        assert!(!omega_check(&rev));
        assert!(omega_check(ob.bounds()));
    }

    #[test]
    fn omega_box_rejects_unordered() {
        assert_eq!(OmegaBox::new(bx([2, 1, 0], [3, 2, 1])), Err(Error::OmegaViolated));
        assert!(OmegaBox::new(bx([0, 1, 2], [1, 2, 3])).is_ok());
    }

    #[test]
    fn omega_check_examples() {
        let zeros = bx([0, 0, 0], [3, 7, 2]);
        assert!(omega_check(&zeros) && omega_prime_check(&zeros) && omega_dprime_check(&zeros));
        let dec = bx([1, 1, 1], [2, 3, 4]);
        assert!(!omega_check(&dec) && !omega_prime_check(&dec) && !omega_dprime_check(&dec));
        let inc = bx([1, 1, 1], [4, 3, 2]);
        assert!(omega_check(&inc) && omega_prime_check(&inc) && omega_dprime_check(&inc));
    }

    #[test]
    fn q_and_r_vertices() {
        let b = bx([1, 1, 1], [2, 2, 2]);
        let want_q = [[4, 2, 2], [1, 1, 1], [2, 2, 1], [2, 1, 2]].map(Point::from_ints);
        assert_eq!(q_vertices(&b), want_q);
        let u = bx([0, 0, 0], [1, 1, 1]);
        let want_r = [[1, 1, 1], [0, 0, 0], [0, 1, 0], [0, 0, 1]].map(Point::from_ints);
        assert_eq!(r_vertices(&u), want_r);
        assert_eq!(build_q(&omega_normalize(&u)), Err(Error::DegenerateTetrahedron));
        let r = build_r(&omega_normalize(&u)).unwrap();
        assert_eq!(tetra_volume(&r), ratio(1, 6));
    }

    #[test]
    fn q_normals_match_display() {
        let ob = omega_normalize(&bx([1, 1, 1], [2, 2, 2]));
        let q = build_q(&ob).unwrap();
        let got = facet_normal_set(&q).sorted();
        let half = ratio(1, 2);
        let mut want: Vec<Vector3> = [[1, -1, -2], [1, -2, -1], [-1, 2, 2], [-1, 1, 1]]
            .map(|c| Point::from_ints(c).scale(&half))
            .to_vec();
        want.sort();
        assert_eq!(got, want);
        assert_eq!(support(q.vertices(), &Point::from_ints([1, -1, -2])).unwrap(), int(-2));
    }

    #[test]
    fn slice_volumes() {
        // a = (0, 0, a3), b = (1, 1, b3)
        let b = Box3Bounds::new([int(0), int(0), ratio(3, 5)], [int(1), int(1), int(2)]).unwrap();
        let ob = OmegaBox::new(b).unwrap();
        assert_eq!(tetra_volume(&build_q(&ob).unwrap()), ratio(1, 10));
        assert_eq!(vol_q_formula(ob.bounds()), ratio(1, 10));
        assert_eq!(tetra_volume(&build_r(&ob).unwrap()), ratio(1, 3));
    }

    #[test]
    fn z_examples() {
        let b = bx([1, 1, 1], [2, 2, 2]);
        assert_eq!(support_max_z(1, &b).unwrap(), int(2));
        assert_eq!(support_max_z(4, &b).unwrap(), int(0));
        assert_eq!(support_max_z(7, &bx([0, 0, 0], [1, 1, 1])).unwrap(), int(2));
        assert_eq!(support_max_z(0, &b), Err(Error::LemmaIndex(0)));
        assert_eq!(support_max_z(9, &b), Err(Error::LemmaIndex(9)));
        assert_eq!(support_max_z(1, &bx([2, 1, 0], [3, 2, 1])), Err(Error::OmegaViolated));
        for i in 1..=8 {
            assert_eq!(support_max_z(i, &b).unwrap(), support_max_generic(i, &b).unwrap(), "z{i}");
        }
    }

    #[test]
    fn mixed_volume_examples() {
        let ob = omega_normalize(&bx([1, 1, 1], [2, 2, 2]));
        assert_eq!(mixed_volumes_qr(&ob), (int(1), int(1)));

        let ob = omega_normalize(&bx([0, 1, 2], [3, 4, 5]));
        let (qqr, qrr) = mixed_volumes_qr(&ob);
        assert_eq!(qqr, qrr);
        assert_eq!(qqr, mixed_volume_closed_form(ob.bounds()));

        let ob = omega_normalize(&bx([1, 2, 3], [2, 4, 6]));
        let q = build_q(&ob).unwrap();
        assert_eq!(mixed_volume_against(&q, &r_vertices(ob.bounds())).unwrap(), mixed_volumes_qr(&ob).0);

        // a3 = 0: the expressions are still defined
        let ob = omega_normalize(&bx([0, 0, 0], [1, 1, 1]));
        assert_eq!(mixed_volumes_qr(&ob), (ratio(1, 3), ratio(1, 3)));
    }

    #[test]
    fn integration_examples() {
        let c = ratio(7, 5);
        let (a, b) = (int(2), int(5));
        assert_eq!(integrate_cross_sections(&c, &c, &c, &c, &a, &b).unwrap(), int(3) * &c);
        let z = int(0);
        assert_eq!(integrate_cross_sections(&z, &z, &z, &c, &int(0), &int(1)).unwrap(), &c / int(4));
        let got = integrate_cross_sections(&ratio(1, 6), &int(1), &int(1), &ratio(2, 6), &int(1), &int(2)).unwrap();
        assert_eq!(got, closed_form_volume(&bx([1, 1, 1], [2, 2, 2])));
        assert_eq!(
            integrate_cross_sections_simpson(&ratio(1, 6), &int(1), &int(1), &ratio(2, 6), &int(1), &int(2)).unwrap(),
            got
        );
        assert!(integrate_cross_sections(&c, &c, &c, &c, &b, &a).is_err());
    }

    #[test]
    fn bernstein_integral_of_higher_degree() {
        // ∫0^1 t^4 dt = 1/5, the k = d term alone
        let w = [int(0), int(0), int(0), int(0), int(1)];
        assert_eq!(integrate_bernstein(&w, &int(0), &int(1)).unwrap(), ratio(1, 5));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form_volume(&bx([0, 0, 0], [1, 1, 1])), ratio(5, 24));
        assert_eq!(closed_form_volume(&bx([0, 0, 0], [2, 1, 1])), ratio(5, 6));
        assert_eq!(closed_form_volume(&bx([1, 1, 1], [2, 2, 2])), ratio(5, 8));
    }

    #[test]
    fn pipeline_examples() {
        let r = pipeline_volume(&bx([1, 1, 1], [2, 2, 2])).unwrap();
        assert_eq!(r.vol_pipeline, ratio(5, 8));
        assert!(r.agree, "{:?}", r.internal_mismatches);
        assert_eq!(r.intermediates, Intermediates { vol_q: ratio(1, 6), vol_r: ratio(1, 3), v_qqr: int(1), v_qrr: int(1) });

        let r = pipeline_volume(&bx([0, 0, 0], [1, 1, 1])).unwrap();
        assert_eq!(r.vol_pipeline, ratio(5, 24));
        assert!(r.agree);
        assert_eq!(r.intermediates.vol_q, int(0));

        let r = r.with_oracle(ratio(1, 4));
        assert!(!r.agree);
    }

    #[test]
    fn extreme_point_order() {
        let p = extreme_points(&bx([1, 1, 1], [2, 2, 2]));
        assert_eq!(p[0], Point::from_ints([1, 1, 1, 1]));
        assert_eq!(p[1], Point::from_ints([2, 1, 1, 2]));
        assert_eq!(p[7], Point::from_ints([8, 2, 2, 2]));
        let u = extreme_points(&bx([0, 0, 0], [1, 1, 1]));
        assert!(u.contains(&Point::from_ints([0, 0, 0, 0])));
        assert!(u.contains(&Point::from_ints([1, 1, 1, 1])));
    }
}
