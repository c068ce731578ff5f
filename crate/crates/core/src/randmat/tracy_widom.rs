//! Tracy-Widom law of order one.
//!
//! `F_1(s) = exp(-1/2 * int_s^inf [q(x) + (x - s) q(x)^2] dx)` where `q` is the
//! Hastings-McLeod solution of `q'' = s q + 2 q^3`, `q(s) ~ Ai(s)` as
//! `s -> +inf`. The embedded table was produced by [`tw1_cdf_ode`] through
//! `examples/gen_tw1_table.rs`; lookups interpolate it with a monotone cubic.

use super::tw1_table::TW1_TABLE;

/// Left end of the embedded table; `tw1_cdf` returns 0 below it.
pub const TABLE_MIN: f64 = -10.0;
/// Right end of the embedded table; `tw1_cdf` returns 1 above it.
pub const TABLE_MAX: f64 = 6.0;
/// Table spacing.
pub const TABLE_STEP: f64 = 0.005;

/// Starting point of the backward integration.
pub const ODE_START: f64 = 10.0;
/// Default RK4 step of [`tw1_cdf_ode`].
pub const ODE_STEP: f64 = 1e-3;

/// CDF of the Tracy-Widom law of order one.
pub fn tw1_cdf(s: f64) -> f64 {
    if s.is_nan() {
        return f64::NAN;
    }
    if s <= TABLE_MIN {
        return 0.0;
    }
    if s >= TABLE_MAX {
        return 1.0;
    }
    let n = TW1_TABLE.len();
    let x = (s - TABLE_MIN) / TABLE_STEP;
    let k = (x.floor() as usize).min(n - 2);
    let t = x - k as f64;
    let y0 = TW1_TABLE[k];
    let y1 = TW1_TABLE[k + 1];
    // slopes per unit index
    let d0 = pchip_slope(k);
    let d1 = pchip_slope(k + 1);
    let t2 = t * t;
    let t3 = t2 * t;
    let v = (2.0 * t3 - 3.0 * t2 + 1.0) * y0
        + (t3 - 2.0 * t2 + t) * d0
        + (-2.0 * t3 + 3.0 * t2) * y1
        + (t3 - t2) * d1;
    v.clamp(0.0, 1.0)
}

/// Upper tail `1 - F_1(s)`.
pub fn tw1_sf(s: f64) -> f64 {
    1.0 - tw1_cdf(s)
}

/// Quantile of the Tracy-Widom law of order one, by bisection on the table.
pub fn tw1_quantile(prob: f64) -> f64 {
    if !(0.0..=1.0).contains(&prob) {
        return f64::NAN;
    }
    let (mut lo, mut hi) = (TABLE_MIN, TABLE_MAX);
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if tw1_cdf(mid) < prob {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Fritsch-Carlson derivative at table node `k` (per unit index).
fn pchip_slope(k: usize) -> f64 {
    let n = TW1_TABLE.len();
    let delta = |i: usize| TW1_TABLE[i + 1] - TW1_TABLE[i];
    if k == 0 {
        return delta(0);
    }
    if k == n - 1 {
        return delta(n - 2);
    }
    let (a, b) = (delta(k - 1), delta(k));
    if a * b <= 0.0 {
        0.0
    } else {
        2.0 * a * b / (a + b)
    }
}

/// Asymptotic Airy pair `(Ai(x), Ai'(x))` for large positive `x`.
fn airy_asymptotic(x: f64) -> (f64, f64) {
    let zeta = 2.0 / 3.0 * x.powf(1.5);
    let pref = (-zeta).exp() / (2.0 * std::f64::consts::PI.sqrt());
    let (mut su, mut sv) = (1.0, 1.0);
    let mut u = 1.0;
    let mut last = f64::INFINITY;
    for k in 1..60 {
        let kf = k as f64;
        u *= (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0) / ((2.0 * kf - 1.0) * 216.0 * kf);
        let v = -(6.0 * kf + 1.0) / (6.0 * kf - 1.0) * u;
        let scale = (-zeta).powi(-k);
        let term = u * scale;
        if term.abs() > last || term.abs() < 1e-18 {
            break;
        }
        last = term.abs();
        su += term;
        sv += v * scale;
    }
    (pref * x.powf(-0.25) * su, -pref * x.powf(0.25) * sv)
}

/// State `(q, q', int q, int q^2, int (x - s) q^2)` with the integrals over `[s, inf)`.
type State = [f64; 5];

fn rhs(s: f64, y: &State) -> State {
    let q = y[0];
    [y[1], s * q + 2.0 * q * q * q, -q, -q * q, -y[3]]
}

fn rk4(s: f64, y: &State, h: f64) -> State {
    let add = |a: &State, b: &State, c: f64| {
        let mut out = *a;
        for i in 0..5 {
            out[i] += c * b[i];
        }
        out
    };
    let k1 = rhs(s, y);
    let k2 = rhs(s + 0.5 * h, &add(y, &k1, 0.5 * h));
    let k3 = rhs(s + 0.5 * h, &add(y, &k2, 0.5 * h));
    let k4 = rhs(s + h, &add(y, &k3, h));
    let mut out = *y;
    for i in 0..5 {
        out[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    out
}

/// Airy initial state at `s`, accurate when `s` is large.
fn initial_state(s: f64) -> State {
    let (a, ad) = airy_asymptotic(s);
    let zeta = 2.0 / 3.0 * s.powf(1.5);
    let int_ai = (-zeta).exp() / (2.0 * std::f64::consts::PI.sqrt() * s.powf(0.75))
        * (1.0 - 41.0 / (72.0 * zeta) + 9241.0 / (10368.0 * zeta * zeta));
    let int_ai2 = ad * ad - s * a * a;
    let int_x_ai2 = (2.0 * s * s * a * a - 2.0 * s * ad * ad - a * ad) / 3.0;
    [a, ad, int_ai, int_ai2, int_x_ai2]
}

fn cdf_from_state(y: &State) -> f64 {
    (-0.5 * (y[2] + y[4])).exp()
}

/// `F_1` at each point by integrating Painleve II backward with RK4 of step `h`
/// from `ODE_START`. Points above the start use the Airy asymptote directly.
pub fn tw1_cdf_ode_with_step(points: &[f64], h: f64) -> Vec<f64> {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| points[b].total_cmp(&points[a]));
    let mut out = vec![f64::NAN; points.len()];
    let mut s = ODE_START;
    let mut y = initial_state(ODE_START);
    for i in order {
        let target = points[i];
        if target >= ODE_START {
            out[i] = cdf_from_state(&initial_state(target));
            continue;
        }
        while s - target > h {
            y = rk4(s, &y, -h);
            s -= h;
        }
        if s > target {
            y = rk4(s, &y, target - s);
            s = target;
        }
        out[i] = cdf_from_state(&y);
    }
    out
}

pub fn tw1_cdf_ode(points: &[f64]) -> Vec<f64> {
    tw1_cdf_ode_with_step(points, ODE_STEP)
}

/// The table nodes `TABLE_MIN + k * TABLE_STEP` evaluated by the ODE.
pub fn generate_table() -> Vec<f64> {
    let n = ((TABLE_MAX - TABLE_MIN) / TABLE_STEP).round() as usize + 1;
    // integrate on a uniform step that hits every node exactly
    let h = TABLE_STEP / 5.0;
    let mut out = vec![0.0; n];
    let mut y = initial_state(ODE_START);
    let steps_total = ((ODE_START - TABLE_MIN) / h).round() as usize;
    let steps_per_node = 5;
    let top = ((ODE_START - TABLE_MAX) / h).round() as usize;
    for step in 0..=steps_total {
        let s = ODE_START - step as f64 * h;
        if step >= top && (step - top).is_multiple_of(steps_per_node) {
            let node = n - 1 - (step - top) / steps_per_node;
            out[node] = cdf_from_state(&y);
        }
        if step < steps_total {
            y = rk4(s, &y, -h);
        }
    }
    out
}
