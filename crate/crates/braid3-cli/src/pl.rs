//! A piecewise-linear arc-tracing oracle for pure-braid crossing data.
//!
//! This path is deliberately independent of the Artin-action route in the
//! core crate: it realizes the punctured disc concretely and pushes an
//! explicit polyline around, so agreement between the two pipelines is a
//! genuine cross-check of the combinatorial arc model.
//!
//! The disc carries punctures at (1,0), (2,0), (3,0) and the base point at
//! (−2,0); α is the straight segment joining the first two punctures and
//! the initial arc β0 runs (−2,0) → (−1,−1) → (2.5,−1) → (3,0), below the
//! punctures. A braid generator acts as an exact homeomorphism supported on
//! a square of radius R around the midpoint of the two swapped punctures:
//! inside radius r1 it is the point reflection through the center (a half
//! turn), and on each square ring of radius r between r1 and R it slides
//! points along the ring by a distance interpolating linearly from half the
//! perimeter down to zero at R. Square rings keep every image coordinate
//! rational, which a circular model cannot.
//!
//! After the whole word is applied, crossings of the polyline with α and
//! with the three downward rays below the punctures are extracted in order
//! along the arc. The ray crossings grade the arc by winding level; empty
//! bigons against α — adjacent crossing pairs of opposite direction whose
//! enclosed region contains no puncture, detected by exact point-in-polygon
//! counts along the rays — are cancelled until none remain, which is the
//! combinatorial form of pulling the arc taut. Reported are the minimal
//! crossing count and the successive level differences.
//!
//! The polyline is pre-subdivided before each generator so every segment
//! meeting the twist square is short relative to r1; afterwards the line is
//! required to be simple. Subdivision cannot be exactly faithful to the
//! curved ring motion, so on any degeneracy (a vertex landing on a cut, a
//! self-intersection) the whole trace is retried with a finer step, and
//! `SubdivisionLimit` is reported if the cleanup never stabilizes.

use num::{BigInt, BigRational, Signed, Zero};

use braid3::word::{BraidWord, Gen};
use braid3::Error;

type Q = BigRational;

fn q(n: i64, d: i64) -> Q {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Clone, PartialEq)]
struct Pt {
    x: Q,
    y: Q,
}

impl Pt {
    fn new(x: Q, y: Q) -> Self {
        Pt { x, y }
    }
}

/// Exact orientation: sign of the cross product (b−a) × (c−a).
fn orient(a: &Pt, b: &Pt, c: &Pt) -> i8 {
    let v = (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x);
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

/// Crossing count and level grading of a traced arc.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlTrace {
    /// Minimal geometric crossings with α.
    pub crossings: usize,
    /// Winding levels of the surviving crossings, in order along the arc.
    pub levels: Vec<i64>,
    /// Successive differences of `levels`.
    pub level_differences: Vec<i64>,
    /// Crossing directions (+1 upward through α), after bigon removal.
    pub signs: Vec<i8>,
}

/// Orientation of the positive generator's half twist. The value is pinned
/// so the geometry matches the algebraic conventions of the core crate;
/// flipping it mirrors the whole disc.
const POSITIVE_TWIST_SLIDE: i64 = -1;

/// Level increment when the arc crosses a downward ray left to right.
/// Pinned so the level grading agrees with the crossing levels computed
/// from the Artin action, not just up to a global sign.
const RAY_LEVEL_LEFT_TO_RIGHT: i64 = -1;

const MAX_VERTICES: usize = 400_000;

/// Traces the arc of a pure braid and reports minimal crossing data.
pub fn pl_arc_oracle(phi: &BraidWord) -> Result<PlTrace, Error> {
    if !phi.is_pure() {
        return Err(Error::NotPureBraid);
    }
    // Subdivision steps to try, as fractions of r1 = 5/8. Longer words pack
    // strands more tightly, so start finer for them; the mixed denominators
    // vary vertex phases between attempts, which steps past coincidental
    // near-tangencies as well as refining.
    let start = match phi.len() {
        0..=2 => 0,
        3..=4 => 1,
        _ => 2,
    };
    for denom in [4i64, 8, 16, 28, 44, 72, 112, 184, 296].into_iter().skip(start) {
        let step = q(5, 8 * denom);
        match trace_with_step(phi, &step) {
            Ok(trace) => return Ok(trace),
            Err(TraceFailure::Degenerate) => continue,
            Err(TraceFailure::TooManyVertices) => break,
        }
    }
    Err(Error::SubdivisionLimit)
}

enum TraceFailure {
    /// A vertex or crossing landed exactly on a cut, or the polyline failed
    /// to stay simple; a different subdivision step may avoid it.
    Degenerate,
    TooManyVertices,
}

fn trace_with_step(phi: &BraidWord, step: &Q) -> Result<PlTrace, TraceFailure> {
    let mut line = beta_zero();
    for &letter in phi.letters() {
        let center_x = match letter.gen {
            Gen::Sigma1 => q(3, 2),
            Gen::Sigma2 => q(5, 2),
        };
        let slide = if letter.inverse {
            -POSITIVE_TWIST_SLIDE
        } else {
            POSITIVE_TWIST_SLIDE
        };
        line = map_polyline(&line, &center_x, slide, step)?;
        line = snap_to_grid(line);
        line = merge_collinear(line);
        if !clears_punctures(&line) || !is_simple(&line) {
            return Err(TraceFailure::Degenerate);
        }
        line = slack_reduce(line);
    }
    extract(&line)
}

/// The line may touch a puncture only at its final vertex (the arc's moving
/// endpoint). Rounding could in principle push a segment exactly onto one,
/// which would silently corrupt every later step.
fn clears_punctures(line: &[Pt]) -> bool {
    let punctures: [Pt; 3] = [
        Pt::new(q(1, 1), q(0, 1)),
        Pt::new(q(2, 1), q(0, 1)),
        Pt::new(q(3, 1), q(0, 1)),
    ];
    for (i, w) in line.windows(2).enumerate() {
        let last = i + 2 == line.len();
        for p in &punctures {
            if on_segment(&w[0], &w[1], p) && !(last && &w[1] == p) {
                return false;
            }
        }
    }
    true
}

/// Pulls the polyline taut by dropping interior vertices whenever the
/// spanned triangle contains no puncture and no other part of the line.
/// Each drop is an isotopy of the punctured disc, so the traced class is
/// unchanged; without it, iterated twists pack strands exponentially close
/// together and no uniform subdivision step can keep up.
fn slack_reduce(mut line: Vec<Pt>) -> Vec<Pt> {
    let punctures: [Pt; 3] = [
        Pt::new(q(1, 1), q(0, 1)),
        Pt::new(q(2, 1), q(0, 1)),
        Pt::new(q(3, 1), q(0, 1)),
    ];
    loop {
        let n = line.len();
        if n < 3 {
            return line;
        }
        let approx: Vec<(f64, f64)> = line
            .iter()
            .map(|p| (rational_to_f64(&p.x), rational_to_f64(&p.y)))
            .collect();
        let mut keep = vec![true; n];
        let mut changed = false;
        // Pass over odd then even interior indices so neighbours of a
        // dropped vertex are reconsidered next round rather than in the
        // same pass.
        let mut i = 1;
        while i + 1 < n {
            let (a, b, c) = (&line[i - 1], &line[i], &line[i + 1]);
            if can_drop(&line, &approx, i, a, b, c, &punctures) {
                keep[i] = false;
                changed = true;
                i += 2;
            } else {
                i += 1;
            }
        }
        if !changed {
            return line;
        }
        line = line
            .into_iter()
            .zip(keep)
            .filter_map(|(p, k)| k.then_some(p))
            .collect();
        line = merge_collinear(line);
    }
}

fn can_drop(
    line: &[Pt],
    approx: &[(f64, f64)],
    i: usize,
    a: &Pt,
    b: &Pt,
    c: &Pt,
    punctures: &[Pt; 3],
) -> bool {
    let o = orient(a, b, c);
    if o == 0 {
        // Collinear continuation is droppable; a retrace spike is not.
        let forward = (&b.x - &a.x) * (&c.x - &b.x) + (&b.y - &a.y) * (&c.y - &b.y);
        return !forward.is_negative();
    }
    // No puncture inside or on the closed triangle (a vertex of the line
    // sitting exactly at the arc's puncture endpoint is fine).
    for p in punctures {
        if p == a || p == c {
            continue;
        }
        if point_in_closed_triangle(a, b, c, p, o) {
            return false;
        }
    }
    // The segments that share the vertices a and c may touch the triangle
    // at those single points only: the neighbour beyond each shared vertex
    // must lie outside the closed triangle and outside its corner cone.
    if i >= 2 {
        let u = &line[i - 2];
        if point_in_closed_triangle(a, b, c, u, o) || in_corner_cone(a, b, c, u, o) {
            return false;
        }
    }
    if i + 2 < line.len() {
        let v = &line[i + 2];
        if point_in_closed_triangle(a, b, c, v, o) || in_corner_cone(c, a, b, v, o) {
            return false;
        }
    }
    // No other segment may meet the closed triangle.
    let (minx, maxx, miny, maxy) = triangle_box(approx, i);
    for j in 0..line.len() - 1 {
        if j + 1 >= i.saturating_sub(1) && j <= i + 1 {
            continue;
        }
        let (ax, ay) = approx[j];
        let (bx, by) = approx[j + 1];
        const PAD: f64 = 1e-6;
        if ax.max(bx) < minx - PAD
            || ax.min(bx) > maxx + PAD
            || ay.max(by) < miny - PAD
            || ay.min(by) > maxy + PAD
        {
            continue;
        }
        if segment_meets_triangle(&line[j], &line[j + 1], a, b, c, o) {
            return false;
        }
    }
    true
}

fn triangle_box(approx: &[(f64, f64)], i: usize) -> (f64, f64, f64, f64) {
    let xs = [approx[i - 1].0, approx[i].0, approx[i + 1].0];
    let ys = [approx[i - 1].1, approx[i].1, approx[i + 1].1];
    (
        xs.iter().cloned().fold(f64::INFINITY, f64::min),
        xs.iter().cloned().fold(f64::NEG_INFINITY, f64::max),
        ys.iter().cloned().fold(f64::INFINITY, f64::min),
        ys.iter().cloned().fold(f64::NEG_INFINITY, f64::max),
    )
}

/// Whether `u` lies in the closed cone at triangle vertex `v` spanned by
/// the directions toward the two other vertices `e1`, `e2` (a segment from
/// `u` to `v` then enters the triangle through more than the vertex).
/// `o` is the orientation of (v, e1, e2).
fn in_corner_cone(v: &Pt, e1: &Pt, e2: &Pt, u: &Pt, o: i8) -> bool {
    let s1 = orient(v, e1, u);
    let s2 = orient(v, u, e2);
    let dot = |w: &Pt| (&u.x - &v.x) * (&w.x - &v.x) + (&u.y - &v.y) * (&w.y - &v.y);
    let side1 = s1 == o || (s1 == 0 && dot(e1).is_positive());
    let side2 = s2 == o || (s2 == 0 && dot(e2).is_positive());
    side1 && side2
}

/// Point containment in the closed triangle with orientation `o` of (a,b,c).
fn point_in_closed_triangle(a: &Pt, b: &Pt, c: &Pt, p: &Pt, o: i8) -> bool {
    let s1 = orient(a, b, p);
    let s2 = orient(b, c, p);
    let s3 = orient(c, a, p);
    (s1 == o || s1 == 0) && (s2 == o || s2 == 0) && (s3 == o || s3 == 0)
}

/// Whether segment (p,q) meets the closed triangle (a,b,c).
fn segment_meets_triangle(p: &Pt, q: &Pt, a: &Pt, b: &Pt, c: &Pt, o: i8) -> bool {
    if point_in_closed_triangle(a, b, c, p, o) || point_in_closed_triangle(a, b, c, q, o) {
        return true;
    }
    segments_intersect(p, q, a, b)
        || segments_intersect(p, q, b, c)
        || segments_intersect(p, q, c, a)
}

/// Rounds every coordinate to the 2^-20 grid. The perturbation is far below
/// every feature separation we rely on, and it keeps denominators bounded
/// across letters, which keeps the exact arithmetic flat-rate. Any
/// coincidence the rounding might create is caught by the simplicity and
/// degeneracy checks and retried at another step.
fn snap_to_grid(line: Vec<Pt>) -> Vec<Pt> {
    const GRID_BITS: u32 = 20;
    let scale = BigInt::from(1u64 << GRID_BITS);
    let snap = |v: &Q| -> Q {
        if v.denom() <= &scale {
            return v.clone();
        }
        let scaled = v * BigRational::from_integer(scale.clone());
        BigRational::new(scaled.round().to_integer(), scale.clone())
    };
    line.iter().map(|p| Pt::new(snap(&p.x), snap(&p.y))).collect()
}

/// Applies the twist to a polyline, splitting each segment adaptively until
/// both the piece and its image chord are short. Image-driven splitting is
/// what keeps the chords faithful inside the interpolation ring, where the
/// slide gradient shears nearby rings apart.
fn map_polyline(
    line: &[Pt],
    center_x: &Q,
    slide: i64,
    step: &Q,
) -> Result<Vec<Pt>, TraceFailure> {
    let reach = q(R_NUM, R_DEN) + step;
    let lo_x = center_x - &reach;
    let hi_x = center_x + &reach;
    let mut out: Vec<Pt> = Vec::with_capacity(line.len() * 2);
    out.push(twist(&line[0], center_x, slide));
    for w in line.windows(2) {
        let (p, n) = (&w[0], &w[1]);
        let outside = (p.x < lo_x && n.x < lo_x)
            || (p.x > hi_x && n.x > hi_x)
            || (p.y.abs() > reach && n.y.abs() > reach && p.y.is_positive() == n.y.is_positive());
        if outside {
            out.push(n.clone());
            continue;
        }
        let fp = twist(p, center_x, slide);
        let fn_ = twist(n, center_x, slide);
        map_segment(&mut out, p, &fp, n, &fn_, center_x, slide, step, 24)?;
        if out.len() > MAX_VERTICES {
            return Err(TraceFailure::TooManyVertices);
        }
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn map_segment(
    out: &mut Vec<Pt>,
    p: &Pt,
    fp: &Pt,
    n: &Pt,
    fn_: &Pt,
    center_x: &Q,
    slide: i64,
    step: &Q,
    depth: u32,
) -> Result<(), TraceFailure> {
    let span = |a: &Pt, b: &Pt| {
        let dx = (&a.x - &b.x).abs();
        let dy = (&a.y - &b.y).abs();
        if dx > dy {
            dx
        } else {
            dy
        }
    };
    if depth == 0 {
        return Err(TraceFailure::TooManyVertices);
    }
    if &span(p, n) <= step && &span(fp, fn_) <= step {
        out.push(fn_.clone());
        return Ok(());
    }
    let mid = Pt::new((&p.x + &n.x) / q(2, 1), (&p.y + &n.y) / q(2, 1));
    let fmid = twist(&mid, center_x, slide);
    map_segment(out, p, fp, &mid, &fmid, center_x, slide, step, depth - 1)?;
    map_segment(out, &mid, &fmid, n, fn_, center_x, slide, step, depth - 1)
}

fn beta_zero() -> Vec<Pt> {
    vec![
        Pt::new(q(-2, 1), q(0, 1)),
        Pt::new(q(-1, 1), q(-1, 1)),
        Pt::new(q(5, 2), q(-1, 1)),
        Pt::new(q(3, 1), q(0, 1)),
    ]
}

const R1_NUM: i64 = 5;
const R1_DEN: i64 = 8;
const R_NUM: i64 = 5;
const R_DEN: i64 = 4;

/// The exact square-ring twist about (center_x, 0).
fn twist(p: &Pt, center_x: &Q, slide: i64) -> Pt {
    let r1 = q(R1_NUM, R1_DEN);
    let r_outer = q(R_NUM, R_DEN);
    let dx = &p.x - center_x;
    let dy = p.y.clone();
    let r = if dx.abs() >= dy.abs() { dx.abs() } else { dy.abs() };
    if r >= r_outer {
        return p.clone();
    }
    if r <= r1 {
        // Half turn: point reflection through the center.
        return Pt::new(center_x - &dx, -dy);
    }
    // Slide along the square ring of radius r by a fraction of half the
    // perimeter interpolating from 1 at r1 to 0 at R.
    let half_perimeter = q(4, 1) * &r;
    let fraction = (&r_outer - &r) / (&r_outer - &r1);
    let distance = half_perimeter * fraction * q(slide, 1);
    let u = ring_coordinate(&dx, &dy, &r);
    let perimeter = q(8, 1) * &r;
    let mut u2 = (u + distance) % &perimeter;
    if u2.is_negative() {
        u2 += &perimeter;
    }
    let (nx, ny) = ring_point(&u2, &r);
    Pt::new(center_x + nx, ny)
}

/// Perimeter coordinate on the square ring of radius r, counterclockwise
/// from the bottom of the right edge.
fn ring_coordinate(dx: &Q, dy: &Q, r: &Q) -> Q {
    if dx == r {
        // right edge, going up
        dy + r
    } else if dy == r {
        // top edge, going left
        q(2, 1) * r + (r - dx)
    } else if &-dx.clone() == r {
        // left edge, going down
        q(4, 1) * r + (r - dy)
    } else {
        // bottom edge, going right
        q(6, 1) * r + (dx + r)
    }
}

fn ring_point(u: &Q, r: &Q) -> (Q, Q) {
    let two_r = q(2, 1) * r;
    if u < &two_r {
        (r.clone(), u - r)
    } else if u < &(q(2, 1) * &two_r) {
        (r - (u - &two_r), r.clone())
    } else if u < &(q(3, 1) * &two_r) {
        (-r.clone(), r - (u - q(2, 1) * &two_r))
    } else {
        ((u - q(3, 1) * &two_r) - r, -r.clone())
    }
}

fn merge_collinear(line: Vec<Pt>) -> Vec<Pt> {
    let mut out: Vec<Pt> = Vec::with_capacity(line.len());
    for p in line {
        if out.last() == Some(&p) {
            continue;
        }
        while out.len() >= 2 {
            let b = &out[out.len() - 1];
            let a = &out[out.len() - 2];
            let collinear = orient(a, b, &p) == 0;
            if !collinear {
                break;
            }
            // Only drop b when it lies between a and p (straight
            // continuation); a retrace is kept and caught by is_simple.
            let forward = (&b.x - &a.x) * (&p.x - &b.x) + (&b.y - &a.y) * (&p.y - &b.y);
            if forward.is_negative() {
                break;
            }
            out.pop();
        }
        out.push(p);
    }
    out
}

/// Exact simplicity check with a float sweep prefilter.
fn is_simple(line: &[Pt]) -> bool {
    find_intersection(line).is_none()
}

/// Returns the indices of an intersecting non-adjacent segment pair or a
/// retracing adjacent pair, if any.
fn find_intersection(line: &[Pt]) -> Option<(usize, usize)> {
    let n = line.len();
    if n < 2 {
        return None;
    }
    let approx: Vec<(f64, f64)> = line
        .iter()
        .map(|p| (rational_to_f64(&p.x), rational_to_f64(&p.y)))
        .collect();
    const PAD: f64 = 1e-6;
    let mut boxes: Vec<(f64, f64, f64, f64, usize)> = (0..n - 1)
        .map(|i| {
            let (x0, y0) = approx[i];
            let (x1, y1) = approx[i + 1];
            (
                x0.min(x1) - PAD,
                x0.max(x1) + PAD,
                y0.min(y1) - PAD,
                y0.max(y1) + PAD,
                i,
            )
        })
        .collect();
    boxes.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    let mut active: Vec<usize> = Vec::new();
    for bi in 0..boxes.len() {
        let (minx, _, miny, maxy, i) = boxes[bi];
        active.retain(|&aj| boxes[aj].1 >= minx);
        for &aj in &active {
            let (_, _, jminy, jmaxy, j) = boxes[aj];
            if jmaxy < miny || jminy > maxy {
                continue;
            }
            let (lo, hi) = if i < j { (i, j) } else { (j, i) };
            if hi == lo + 1 {
                // Adjacent segments: reject a retrace through the shared
                // vertex.
                let a = &line[lo];
                let b = &line[hi];
                let c = &line[hi + 1];
                if orient(a, b, c) == 0 {
                    let back = (&c.x - &b.x) * (&a.x - &b.x) + (&c.y - &b.y) * (&a.y - &b.y);
                    if !back.is_negative() {
                        return Some((lo, hi));
                    }
                }
                continue;
            }
            if segments_intersect(&line[lo], &line[lo + 1], &line[hi], &line[hi + 1]) {
                return Some((lo, hi));
            }
        }
        active.push(bi);
    }
    None
}

fn rational_to_f64(v: &Q) -> f64 {
    let n = v.numer();
    let d = v.denom();
    // Values stay within a modest range; a direct conversion is fine for a
    // prefilter with an absolute pad.
    let nf = bigint_to_f64(n);
    let df = bigint_to_f64(d);
    nf / df
}

fn bigint_to_f64(v: &BigInt) -> f64 {
    // Enough precision for a conservative prefilter.
    let s = v.to_string();
    s.parse::<f64>().unwrap_or(f64::MAX)
}

fn on_segment(a: &Pt, b: &Pt, p: &Pt) -> bool {
    orient(a, b, p) == 0
        && p.x >= a.x.clone().min(b.x.clone())
        && p.x <= a.x.clone().max(b.x.clone())
        && p.y >= a.y.clone().min(b.y.clone())
        && p.y <= a.y.clone().max(b.y.clone())
}

/// Closed-segment intersection test for non-adjacent segments.
fn segments_intersect(a: &Pt, b: &Pt, c: &Pt, d: &Pt) -> bool {
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);
    if o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0 {
        return true;
    }
    on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) || on_segment(c, d, b)
}

#[derive(Debug, Clone)]
enum Cut {
    Alpha { dir: i8 },
    Ray { puncture: usize, dir: i8 },
}

fn extract(line: &[Pt]) -> Result<PlTrace, TraceFailure> {
    let zero = Q::zero();
    // Reject vertices on the cuts (interior for α's closure, anywhere for
    // the rays), which would make crossing counts ambiguous.
    for (i, p) in line.iter().enumerate() {
        let interior = i > 0 && i + 1 < line.len();
        if p.y.is_zero() && interior {
            let one = q(1, 1);
            let three = q(3, 1);
            if (p.x >= one && p.x <= q(2, 1)) || p.x == three {
                return Err(TraceFailure::Degenerate);
            }
        }
        if p.y.is_negative() {
            for px in 1..=3i64 {
                if p.x == q(px, 1) {
                    return Err(TraceFailure::Degenerate);
                }
            }
        }
    }
    let mut events: Vec<Cut> = Vec::new();
    for w in line.windows(2) {
        let (p, n) = (&w[0], &w[1]);
        // Crossings of this segment with the four cuts, ordered by the
        // parameter along the segment.
        let mut local: Vec<(Q, Cut)> = Vec::new();
        let py_pos = p.y > zero;
        let ny_pos = n.y > zero;
        if !p.y.is_zero() && !n.y.is_zero() && py_pos != ny_pos {
            let t = -p.y.clone() / (&n.y - &p.y);
            let x = &p.x + (&n.x - &p.x) * &t;
            let one = q(1, 1);
            let two = q(2, 1);
            if x == one || x == two || x == q(3, 1) {
                return Err(TraceFailure::Degenerate);
            }
            if x > one && x < two {
                let dir = if ny_pos { 1 } else { -1 };
                local.push((t, Cut::Alpha { dir }));
            }
        }
        for puncture in 1..=3i64 {
            let px = q(puncture, 1);
            let p_left = p.x < px;
            let n_left = n.x < px;
            if p.x == px || n.x == px || p_left == n_left {
                continue;
            }
            let t = (&px - &p.x) / (&n.x - &p.x);
            let y = &p.y + (&n.y - &p.y) * &t;
            if y.is_zero() {
                return Err(TraceFailure::Degenerate);
            }
            if y.is_negative() {
                let dir = if n_left { -1 } else { 1 };
                local.push((t, Cut::Ray { puncture: puncture as usize, dir }));
            }
        }
        local.sort_by(|a, b| a.0.cmp(&b.0));
        events.extend(local.into_iter().map(|(_, c)| c));
    }

    // Level of each α crossing and per-ray prefix sums for the bigon test.
    struct AlphaEvent {
        dir: i8,
        level: i64,
        ray_prefix: [i64; 3],
    }
    let mut level = 0i64;
    let mut ray_prefix = [0i64; 3];
    let mut alphas: Vec<AlphaEvent> = Vec::new();
    for e in &events {
        match e {
            Cut::Ray { puncture, dir } => {
                let signed = *dir as i64 * RAY_LEVEL_LEFT_TO_RIGHT;
                level += signed;
                ray_prefix[puncture - 1] += *dir as i64;
            }
            Cut::Alpha { dir } => alphas.push(AlphaEvent {
                dir: *dir,
                level,
                ray_prefix,
            }),
        }
    }

    // Cancel empty bigons: adjacent surviving crossings of opposite
    // direction whose connecting subarc has zero winding about every
    // puncture. Each pass is a homotopy of the arc, so levels of the
    // survivors are unchanged.
    let mut alive: Vec<bool> = vec![true; alphas.len()];
    loop {
        let living: Vec<usize> = (0..alphas.len()).filter(|&i| alive[i]).collect();
        let mut removed = false;
        for pair in living.windows(2) {
            let (i, j) = (pair[0], pair[1]);
            if alphas[i].dir == -alphas[j].dir
                && alphas[i].ray_prefix == alphas[j].ray_prefix
            {
                alive[i] = false;
                alive[j] = false;
                removed = true;
                break;
            }
        }
        if !removed {
            break;
        }
    }

    let levels: Vec<i64> = alphas
        .iter()
        .zip(&alive)
        .filter(|(_, &a)| a)
        .map(|(e, _)| e.level)
        .collect();
    let signs: Vec<i8> = alphas
        .iter()
        .zip(&alive)
        .filter(|(_, &a)| a)
        .map(|(e, _)| e.dir)
        .collect();
    let level_differences = levels.windows(2).map(|w| w[1] - w[0]).collect();
    Ok(PlTrace {
        crossings: levels.len(),
        levels,
        level_differences,
        signs,
    })
}
