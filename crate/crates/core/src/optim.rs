//! Small derivative-free minimizers on the nonnegative orthant.

/// Result of a bounded minimization.
#[derive(Debug, Clone)]
pub(crate) struct Minimum {
    pub x: Vec<f64>,
    pub value: f64,
    pub evaluations: usize,
    pub exhausted: bool,
}

/// Counts evaluations and remembers the best point seen.
pub(crate) struct Tracked<F> {
    f: F,
    pub evaluations: usize,
    pub best: Option<(Vec<f64>, f64)>,
}

impl<F: FnMut(&[f64]) -> f64> Tracked<F> {
    pub fn new(f: F) -> Self {
        Self { f, evaluations: 0, best: None }
    }

    pub fn eval(&mut self, x: &[f64]) -> f64 {
        self.evaluations += 1;
        let v = (self.f)(x);
        let v = if v.is_nan() { f64::INFINITY } else { v };
        if self.best.as_ref().is_none_or(|(_, b)| v < *b) {
            self.best = Some((x.to_vec(), v));
        }
        v
    }
}

const POLISH_FLOOR: f64 = 0.1;

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Golden-section search on `[a, b]` down to an interval of width `tol`.
pub(crate) fn golden_section<F: FnMut(f64) -> f64>(mut f: F, mut a: f64, mut b: f64, tol: f64, max_iter: usize) -> (f64, f64, usize) {
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    let mut evals = 2;
    while (b - a) > tol && evals < max_iter {
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
        evals += 1;
    }
    if fc <= fd { (c, fc, evals) } else { (d, fd, evals) }
}

/// One-dimensional bounded minimization on `[0, upper]`: bracket on the
/// supplied grid (which must start at 0), then refine by golden section.
pub(crate) fn minimize_1d<F: FnMut(f64) -> f64>(mut f: F, grid: &[f64], tol: f64, max_evals: usize) -> Minimum {
    let mut f = move |x: f64| {
        let v = f(x);
        if v.is_nan() { f64::INFINITY } else { v }
    };
    let values: Vec<f64> = grid.iter().map(|&g| f(g)).collect();
    let mut evals = grid.len();
    let i = values.iter().enumerate().fold(0, |bi, (i, &v)| if v < values[bi] { i } else { bi });
    let mut best = (grid[i], values[i]);
    let lo = if i == 0 { grid[0] } else { grid[i - 1] };
    let hi = if i + 1 < grid.len() { grid[i + 1] } else { grid[i] };
    if hi > lo {
        let (x, v, used) = golden_section(&mut f, lo, hi, tol, max_evals.saturating_sub(evals));
        evals += used;
        if v < best.1 {
            best = (x, v);
        }
        if best.0 > lo && best.0 < hi {
            let (x, v, used) = parabolic_polish(&mut f, best, lo, hi);
            evals += used;
            best = (x, v);
        }
    }
    Minimum { x: vec![best.0], value: best.1, evaluations: evals, exhausted: evals >= max_evals }
}

/// Golden section stalls where roundoff flattens the objective. A vertex
/// fitted through a symmetric stencil in `x²` (smooth near zero, where `x`
/// is a scaled standard deviation) locates the stationary point more
/// precisely; it is kept unless clearly worse.
fn parabolic_polish<F: FnMut(f64) -> f64>(f: &mut F, start: (f64, f64), lo: f64, hi: f64) -> (f64, f64, usize) {
    let (mut x, mut fx) = start;
    let mut evals = 0;
    for _ in 0..2 {
        let s = x * x;
        let h = 1e-4 * s.max(POLISH_FLOOR);
        if s - h < lo * lo || s + h > hi * hi {
            break;
        }
        let (fl, fr) = (f((s - h).sqrt()), f((s + h).sqrt()));
        evals += 2;
        let curv = fl - 2.0 * fx + fr;
        if !(curv > 0.0) {
            break;
        }
        let step = 0.5 * h * (fl - fr) / curv;
        if step.abs() > h {
            break;
        }
        let cand = (s + step).sqrt();
        let fc = f(cand);
        evals += 1;
        if !(fc <= fx + 1e-12 * fx.abs().max(1.0)) {
            break;
        }
        x = cand;
        fx = fc;
    }
    (x, fx, evals)
}

/// Nelder–Mead on the nonnegative orthant (points are clamped at zero).
pub(crate) fn nelder_mead<F: FnMut(&[f64]) -> f64>(
    f: &mut Tracked<F>,
    start: &[f64],
    step: &[f64],
    tol: f64,
    max_evals: usize,
) -> bool {
    let dim = start.len();
    let clamp = |v: Vec<f64>| -> Vec<f64> { v.into_iter().map(|x| x.max(0.0)).collect() };
    let mut simplex: Vec<(Vec<f64>, f64)> = Vec::with_capacity(dim + 1);
    let s0 = clamp(start.to_vec());
    let v0 = f.eval(&s0);
    simplex.push((s0, v0));
    for k in 0..dim {
        let mut p = start.to_vec();
        p[k] += step[k];
        let p = clamp(p);
        let v = f.eval(&p);
        simplex.push((p, v));
    }
    while f.evaluations < max_evals {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        let spread = simplex
            .iter()
            .skip(1)
            .map(|(p, _)| p.iter().zip(&simplex[0].0).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max))
            .fold(0.0, f64::max);
        let fspread = (simplex[dim].1 - simplex[0].1).abs();
        if spread < tol && fspread < 1e-12 * (1.0 + simplex[0].1.abs()) {
            return true;
        }
        let centroid: Vec<f64> =
            (0..dim).map(|k| simplex[..dim].iter().map(|(p, _)| p[k]).sum::<f64>() / dim as f64).collect();
        let worst = simplex[dim].clone();
        let along = |t: f64| -> Vec<f64> {
            clamp(centroid.iter().zip(&worst.0).map(|(c, w)| c + t * (c - w)).collect())
        };
        let xr = along(1.0);
        let fr = f.eval(&xr);
        if fr < simplex[0].1 {
            let xe = along(2.0);
            let fe = f.eval(&xe);
            simplex[dim] = if fe < fr { (xe, fe) } else { (xr, fr) };
        } else if fr < simplex[dim - 1].1 {
            simplex[dim] = (xr, fr);
        } else {
            let (xc, fc) = if fr < worst.1 {
                let xc = along(0.5);
                let fc = f.eval(&xc);
                (xc, fc)
            } else {
                let xc = along(-0.5);
                let fc = f.eval(&xc);
                (xc, fc)
            };
            if fc < worst.1.min(fr) {
                simplex[dim] = (xc, fc);
            } else {
                let best = simplex[0].0.clone();
                for item in simplex.iter_mut().skip(1) {
                    let p = clamp(item.0.iter().zip(&best).map(|(x, b)| b + 0.5 * (x - b)).collect());
                    let v = f.eval(&p);
                    *item = (p, v);
                }
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_finds_parabola_minimum() {
        let (x, _, _) = golden_section(|x| (x - 1.3).powi(2), 0.0, 5.0, 1e-10, 500);
        assert!((x - 1.3).abs() < 1e-8);
    }

    #[test]
    fn one_dimensional_boundary_minimum() {
        let grid = [0.0, 0.1, 1.0, 10.0];
        let m = minimize_1d(|x| (x + 1.0).powi(2), &grid, 1e-10, 500);
        assert_eq!(m.x[0], 0.0);
    }

    #[test]
    fn nelder_mead_rosenbrock_and_boundary() {
        let mut f = Tracked::new(|p: &[f64]| (1.0 - p[0]).powi(2) + 100.0 * (p[1] - p[0] * p[0]).powi(2));
        assert!(nelder_mead(&mut f, &[0.5, 0.5], &[0.1, 0.1], 1e-9, 20_000));
        let (x, _) = f.best.unwrap();
        assert!((x[0] - 1.0).abs() < 1e-5 && (x[1] - 1.0).abs() < 1e-5, "{x:?}");

        let mut g = Tracked::new(|p: &[f64]| (p[0] + 2.0).powi(2) + (p[1] - 3.0).powi(2));
        nelder_mead(&mut g, &[1.0, 1.0], &[0.5, 0.5], 1e-10, 5000);
        let (x, _) = g.best.unwrap();
        assert!(x[0] == 0.0 && (x[1] - 3.0).abs() < 1e-6, "{x:?}");
    }
}
