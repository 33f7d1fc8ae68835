//! Named check suites tying the enumeration, the recursions and the
//! character formulas together.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::exact::{factorial, rational, QPolynomial};
use crate::oracle::{
    oracle_one_backbone, oracle_p, oracle_q, oracle_two_backbone, oracle_u, oracle_v, OracleConfig,
};
use crate::perm::{CycleType, Permutation};
use crate::young::{
    charsum_u, charsum_u_hooks, charsum_u_orthogonality, hook_char_identity, hook_char_matching,
    hook_schur_closed_form, kronecker_count_bruteforce, kronecker_count_characters, mn_character,
    schur_all_ones, tau_sum, tau_sum_expected, HookShape, YoungDiagram, ORTHOGONALITY_LIMIT,
};
use crate::{one_backbone as one, two_backbone as two, Error, Result};

/// `P_g^[2]` for `g = 0..=5` in factored form.
pub const REFERENCE_P2: [&str; 6] = [
    "z",
    "z^3(20z+21)",
    "z^5(1696z^2+6096z+1485)",
    "z^7(330560z^3+2614896z^2+1954116z+225225)",
    "z^9(118652416z^4+1661701632z^3+2532145536z^2+851296320z+59520825)",
    "z^11(68602726400z^5+1495077259776z^4+3850801696512z^3+2561320295136z^2+505213089300z+24325703325)",
];

/// `P_g` for `g = 1, 2, 3`, as coefficient lists from `z^0`.
pub fn reference_p(g: usize) -> Option<QPolynomial> {
    match g {
        1 => Some(QPolynomial::from_ints(&[0, 0, 1])),
        2 => Some(QPolynomial::from_ints(&[0, 0, 0, 0, 21, 21])),
        3 => Some(QPolynomial::from_ints(&[
            0, 0, 0, 0, 0, 0, 1485, 6138, 1738,
        ])),
        _ => None,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Oracle,
    Characters,
    Hz,
    Pipeline,
    Asymptotics,
    All,
}

impl Suite {
    pub const INDIVIDUAL: [Suite; 5] = [
        Suite::Oracle,
        Suite::Characters,
        Suite::Hz,
        Suite::Pipeline,
        Suite::Asymptotics,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Oracle => "oracle",
            Suite::Characters => "characters",
            Suite::Hz => "hz",
            Suite::Pipeline => "pipeline",
            Suite::Asymptotics => "asymptotics",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::INDIVIDUAL
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub passed: bool,
    /// Error text when the check could not run to completion.
    pub detail: Option<String>,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn elapsed(&self) -> Duration {
        self.checks.iter().map(|c| c.elapsed).sum()
    }

    fn run(&mut self, suite: Suite, name: impl Into<String>, check: impl FnOnce() -> Result<bool>) {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let (passed, detail) = match outcome {
            Ok(passed) => (passed, None),
            Err(e) => (false, Some(e.to_string())),
        };
        self.checks.push(Check {
            suite,
            name: name.into(),
            passed,
            detail,
            elapsed,
        });
    }
}

/// Runs `suite` with enumerations up to `max_n` chords.
///
/// Fails with [`Error::LimitExceeded`] before running anything if the
/// enumerations would go past `config`.
pub fn run(suite: Suite, max_n: usize, config: &OracleConfig) -> Result<Report> {
    let suites: Vec<Suite> = match suite {
        Suite::All => Suite::INDIVIDUAL.to_vec(),
        one => vec![one],
    };
    if suites.contains(&Suite::Oracle) && max_n > config.limit {
        return Err(Error::LimitExceeded {
            n: max_n,
            limit: config.limit,
        });
    }
    let mut report = Report::default();
    for s in suites {
        match s {
            Suite::Oracle => oracle_suite(&mut report, max_n, config),
            Suite::Characters => character_suite(&mut report, max_n, config),
            Suite::Hz => hz_suite(&mut report, max_n),
            Suite::Pipeline => pipeline_suite(&mut report),
            Suite::Asymptotics => asymptotics_suite(&mut report),
            Suite::All => unreachable!(),
        }
    }
    Ok(report)
}

fn all_n(max_n: usize, mut check: impl FnMut(usize) -> Result<bool>) -> Result<bool> {
    for n in 0..=max_n {
        if !check(n)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn oracle_suite(report: &mut Report, max_n: usize, config: &OracleConfig) {
    let s = Suite::Oracle;
    report.run(
        s,
        format!("one backbone: enumeration = recursion, n <= {max_n}"),
        || {
            all_n(max_n, |n| {
                Ok(oracle_one_backbone(n, config)? == one::genus_table(n))
            })
        },
    );
    report.run(
        s,
        format!("two backbones: enumeration = generating function, n <= {max_n}"),
        || {
            all_n(max_n, |n| {
                Ok(oracle_two_backbone(n, config)? == two::genus_table(n)?)
            })
        },
    );
    let sym = max_n.min(config.symbolic_limit);
    report.run(s, format!("P(n,N) from enumeration, n <= {sym}"), || {
        all_n(sym, |n| Ok(oracle_p(n, config)? == one::genus_poly_p(n)))
    });
    report.run(
        s,
        format!("U(n,N) from enumeration = one-backbone counts, n <= {sym}"),
        || {
            all_n(
                sym,
                |n| Ok(n == 0 || oracle_u(n, config)? == two::u_poly(n)),
            )
        },
    );
    report.run(s, format!("Q = U - V from enumeration, n <= {sym}"), || {
        all_n(sym, |n| {
            Ok(
                oracle_q(n, config)? == &oracle_u(n, config)? - &oracle_v(n, config)?
                    && oracle_q(n, config)? == two::q_poly(n)?,
            )
        })
    });
}

fn character_suite(report: &mut Report, max_n: usize, config: &OracleConfig) {
    let s = Suite::Characters;
    let m_max = (2 * max_n).min(8);
    report.run(
        s,
        format!("sum of squared dimensions = m!, m <= {m_max}"),
        || {
            for m in 0..=m_max {
                let identity = CycleType::identity(m);
                let mut total = num_bigint::BigInt::from(0);
                for shape in YoungDiagram::all(m) {
                    let dim = mn_character(&shape, &identity)?;
                    if !dim.is_positive() && m > 0 {
                        return Ok(false);
                    }
                    total += &dim * &dim;
                }
                if total != factorial(m as u64) {
                    return Ok(false);
                }
            }
            Ok(true)
        },
    );
    report.run(s, format!("column orthogonality, m <= {m_max}"), || {
        for m in 1..=m_max {
            let shapes = YoungDiagram::all(m);
            let classes = CycleType::all(m);
            let table: Vec<Vec<_>> = shapes
                .iter()
                .map(|y| {
                    classes
                        .iter()
                        .map(|c| mn_character(y, c))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<_>>()?;
            for (a, ca) in classes.iter().enumerate() {
                for b in 0..classes.len() {
                    let sum: num_bigint::BigInt = table.iter().map(|row| &row[a] * &row[b]).sum();
                    let expected = if a == b {
                        ca.centralizer_order()
                    } else {
                        0.into()
                    };
                    if sum != expected {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    });
    report.run(s, "hook characters match closed forms, 2n <= 12", || {
        for n in 1..=6 {
            let identity = CycleType::identity(2 * n);
            let matching = CycleType::matching(n);
            for hook in HookShape::all(2 * n) {
                let y = hook.diagram();
                if mn_character(&y, &identity)? != hook_char_identity(hook.p, hook.q)
                    || mn_character(&y, &matching)? != hook_char_matching(hook.p, hook.q, n)?
                {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    });
    report.run(s, "split-point character sums, 2n <= 10", || {
        for n in 1..=5 {
            for shape in YoungDiagram::all(2 * n) {
                if tau_sum(&shape, n)? != tau_sum_expected(&shape) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    });
    report.run(s, "hook Schur values, 2n <= 12, N <= 14", || {
        for n in 1..=6u64 {
            for hook in HookShape::all(2 * n as usize) {
                for vars in 1..=14 {
                    if schur_all_ones(&hook.diagram(), vars)
                        != hook_schur_closed_form(hook.p, hook.q, vars)
                    {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    });
    report.run(
        s,
        "character-count identity for split-point classes, n <= 3",
        || {
            for n in 1..=3 {
                for c in 1..2 * n {
                    let tau = Permutation::two_backbone(c, n);
                    for class in CycleType::all(2 * n) {
                        if kronecker_count_bruteforce(&tau, &class)?
                            != kronecker_count_characters(&tau.cycle_type(), &class)?
                        {
                            return Ok(false);
                        }
                    }
                }
            }
            Ok(true)
        },
    );
    let sym = max_n.min(5).min(config.symbolic_limit);
    report.run(
        s,
        format!("U(n,N): character sum = enumeration, n <= {sym}"),
        || {
            for n in 1..=sym {
                let u = charsum_u(n);
                if u != oracle_u(n, config)? || u != charsum_u_hooks(n) {
                    return Ok(false);
                }
            }
            Ok(true)
        },
    );
    let orth = max_n.min(4).min(ORTHOGONALITY_LIMIT);
    report.run(
        s,
        format!("U(n,N): full diagram sum = reduced sum, n <= {orth}"),
        || {
            for n in 1..=orth {
                if charsum_u_orthogonality(n)? != charsum_u(n) {
                    return Ok(false);
                }
            }
            Ok(true)
        },
    );
    let q = max_n.min(5);
    report.run(
        s,
        format!("Q = U - V with U from characters, n <= {q}"),
        || {
            for n in 1..=q {
                if !two::q_decomposition_check(n)? {
                    return Ok(false);
                }
            }
            Ok(true)
        },
    );
}

fn hz_suite(report: &mut Report, max_n: usize) {
    let s = Suite::Hz;
    let order = max_n.max(12);
    report.run(
        s,
        format!("generating-function identity to z^{order}"),
        || Ok(one::hz_identity_check(order)),
    );
    report.run(s, "closed forms for c_1, c_2, c_3, n <= 40", || {
        for g in 1..=3 {
            for n in 0..=40 {
                if one::closed_form_c(g, n)? != one::hz_count(g, n) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    });
    report.run(s, "c_g(2g) = (4g)!/(4^g (2g+1)!), g <= 10", || {
        Ok((0..=10usize).all(|g| {
            let expected = factorial(4 * g as u64)
                / (crate::exact::pow4(g as u64) * factorial(2 * g as u64 + 1));
            one::hz_count(g, 2 * g) == expected
        }))
    });
    report.run(s, "ODE residual vanishes to z^40, g <= 4", || {
        for g in 1..=4 {
            if !one::ode_residual(g, 40)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    });
    report.run(s, "U_g(z) = (1-2z) C_{g+1}(z) / z, g <= 3", || {
        for g in 0..=3 {
            let lhs = two::u_series(g, 30).shift(1);
            let rhs = &crate::exact::QSeries::from_poly(&QPolynomial::from_ints(&[1, -2]), 30)
                * &one::c_series(g + 1, 30);
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    });
}

fn pipeline_suite(report: &mut Report) {
    let s = Suite::Pipeline;
    report.run(s, "P_g: ODE pipeline = series, g = 2..6", || {
        for g in 2..=6 {
            if one::pg_via_ode(g)? != one::pg_via_series(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    });
    report.run(s, "P_g reference polynomials, g = 1..3", || {
        for g in 1..=3 {
            if Some(one::p_poly(g)?) != reference_p(g) {
                return Ok(false);
            }
        }
        Ok(true)
    });
    report.run(s, "P_g^[2] reference polynomials, g = 0..5", || {
        for (g, expected) in REFERENCE_P2.iter().enumerate() {
            if two::p2_poly(g)?.render_factored("z") != *expected {
                return Ok(false);
            }
        }
        Ok(true)
    });
    report.run(
        s,
        "P_g(1/4): recurrence = evaluation = Gamma form, g <= 6",
        || {
            if one::pg_at_quarter(2)? != rational(105, 1024) {
                return Ok(false);
            }
            for g in 1..=6 {
                let value = one::p_poly(g)?.evaluate(&rational(1, 4));
                if one::pg_at_quarter(g)? != value || one::pg_at_quarter_gamma(g)? != value {
                    return Ok(false);
                }
            }
            Ok(true)
        },
    );
    report.run(
        s,
        "ODE step: deg Q_g <= 3g+2 and top fraction = Q_g(1/4), g <= 5",
        || {
            for g in 1..=5 {
                let step = one::ode_step(&one::p_poly(g)?, g)?;
                let at_quarter = step.q.evaluate(&rational(1, 4));
                let expected = one::pg_at_quarter(g)?
                    * crate::exact::int(((12 * g + 6) * (12 * g + 2) * (12 * g - 2)) as i64)
                    / crate::exact::int(256);
                if step.q.degree().is_some_and(|d| d > 3 * g + 2)
                    || step.partial_fractions[&(3 * g + 4)] != at_quarter
                    || at_quarter != expected
                {
                    return Ok(false);
                }
            }
            Ok(true)
        },
    );
    report.run(
        s,
        "P_g^[2] structure: integral, degree, divisibility, lowest term, value at 1/4, g <= 6",
        || {
            for g in 0..=6 {
                if !two::structure(g)?.holds() {
                    return Ok(false);
                }
            }
            Ok(true)
        },
    );
    report.run(s, "R_g^[2] from one-backbone R_g, g <= 6", || {
        for g in 0..=6 {
            if two::r2_from_r(g)? != two::r2_poly(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    });
    // Observed rather than proven; reported but never failing.
    let start = Instant::now();
    let observed = (0..=6).all(|g| {
        two::structure(g)
            .map(|st| st.positive_coefficients)
            .unwrap_or(false)
    });
    report.checks.push(Check {
        suite: s,
        name: "observation: P_g^[2] coefficients positive, g <= 6".into(),
        passed: true,
        detail: (!observed).then(|| "a nonpositive coefficient was found".into()),
        elapsed: start.elapsed(),
    });
}

fn asymptotics_suite(report: &mut Report) {
    let s = Suite::Asymptotics;
    report.run(
        s,
        "closed forms for c_0^[2], c_1^[2], c_2^[2], n <= 40",
        || {
            for g in 0..=2 {
                for n in 0..=40 {
                    if two::closed_form_c2(g, n)? != two::c2_count(g, n)? {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        },
    );
    report.run(
        s,
        "first-order recursions for c_1^[2], c_2^[2], n <= 40",
        || Ok(two::ratio_recursion_check(1, 40)? && two::ratio_recursion_check(2, 40)?),
    );
    report.run(s, "ratio to asymptotic estimate is 1 for g = 0", || {
        for n in 1..=60 {
            if !two::asymptotic_ratio(0, n)?.is_one() {
                return Ok(false);
            }
        }
        Ok(true)
    });
    report.run(
        s,
        "ratio approaches 1 for g = 1, 2 (n = 100, 400; within 10%)",
        || {
            let one = BigRational::one();
            for g in 1..=2 {
                let far = (two::asymptotic_ratio(g, 100)? - &one).abs();
                let near = (two::asymptotic_ratio(g, 400)? - &one).abs();
                if !(near < far && near < rational(1, 10)) {
                    return Ok(false);
                }
            }
            Ok(true)
        },
    );
}
