//! Reproduction checks for the numeric claims this library is built to
//! confirm. Each [`Claim`] pairs an expected value with the computed one.

use std::fmt;

use serde::Serialize;

use crate::cmcomplex;
use crate::cochains::{cheeger_constant, Augmentation};
use crate::error::Result;
use crate::graphs::{canonical_form, staircase};
use crate::partitions::{cor, pow2_family, Partition};
use crate::rational::{ratio, Rational};
use crate::search::{self, cheeger_number, conjectures_of, SearchReport};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub id: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

impl Claim {
    fn new(id: impl Into<String>, expected: impl fmt::Display, computed: impl fmt::Display) -> Claim {
        let expected = expected.to_string();
        let computed = computed.to_string();
        Claim {
            id: id.into(),
            pass: expected == computed,
            expected,
            computed,
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "{}\t{}\t{}\t{}", self.id, self.expected, self.computed, verdict)
    }
}

fn list<T: fmt::Display>(xs: &[T]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Every claim, in a fixed order.
pub fn paper_claims() -> Result<Vec<Claim>> {
    let mut out = Vec::new();

    let reports: Vec<SearchReport> = (3..=8).map(cheeger_number).collect::<Result<_>>()?;
    let expected_h = [ratio(1, 1), ratio(2, 1), ratio(5, 3), ratio(2, 1), ratio(7, 3), ratio(20, 7)];
    for (r, h) in reports.iter().zip(expected_h) {
        out.push(Claim::new(format!("h({})", r.n), h, r.h_value));
    }
    out.push(Claim::new(
        "h(8)-8/3",
        ratio(4, 21),
        reports[5].h_value.checked_sub(ratio(8, 3))?,
    ));

    for n in 4..=6 {
        let c = cheeger_constant(n, 1, Augmentation::Augmented)?;
        out.push(Claim::new(format!("cochain-h({n})=search-h({n})"), reports[n - 3].h_value, c.h));
    }

    for n in 3..=5 {
        let s = cmcomplex::summary(n, true)?;
        out.push(Claim::new(format!("CM({n}) f-vector"), list(expected_f(n)), list(&s.f_vector)));
        out.push(Claim::new(
            format!("CM({n}) betti"),
            list(expected_betti(n)),
            list(s.betti_gf2.as_deref().unwrap_or(&[])),
        ));
    }
    let s5 = cmcomplex::summary(5, false)?;
    out.push(Claim::new("CM(5) maximal faces by dim", "(0,0,60,10)", list(&s5.num_maximal_faces_by_dim)));
    out.push(Claim::new("CM(5) pure", "no", yes(s5.pure)));

    for n in [5, 6] {
        let c = cheeger_constant(n, n as i32 - 3, Augmentation::Augmented)?;
        out.push(Claim::new(format!("h_{}(simplex on {n})", n - 3), ratio(2, 1), c.h));
        out.push(Claim::new(
            format!("h_{} cosystole expansions (n={n})", n - 3),
            "[2/1,2/1]",
            format!("[{},{}]", c.cosystoles.min_expansion, c.cosystoles.max_expansion),
        ));
    }
    for n in [4, 5, 6] {
        let c = cheeger_constant(n, n as i32 - 2, Augmentation::Augmented)?;
        out.push(Claim::new(format!("h_{}(simplex on {n})", n - 2), ratio(1, 1), c.h));
    }

    let mut bad = Vec::new();
    for t in 1..=15 {
        let l = cor(t)?;
        if l.n_min() != 2 * t + 1 || l.h() != ratio(2 * t as i128 + 1, 3) || l.deficiency() != Rational::ZERO {
            bad.push(t);
        }
    }
    out.push(Claim::new("cor(t): N=2t+1, h=(2t+1)/3, def=0 for t<=15", "[]", format!("{bad:?}")));
    out.push(Claim::new("N(3,3,1)", 8, Partition::new(vec![3, 3, 1])?.n_min()));
    out.push(Claim::new("N(6,5,2)", 13, Partition::new(vec![6, 5, 2])?.n_min()));

    let mut bad = Vec::new();
    for t in 2..=64 {
        let t2 = t as i128;
        if pow2_family(t)?.deficiency() != ratio(2 * t2, 3 * (2 * t2 * t2 - 1)) || pow2_family(t)?.n_min() != 4 * t {
            bad.push(t);
        }
    }
    out.push(Claim::new("pow2 family deficiency for 2<=t<=64", "[]", format!("{bad:?}")));
    for (t, d) in [(2, ratio(4, 21)), (4, ratio(8, 93)), (8, ratio(16, 381))] {
        out.push(Claim::new(format!("deficiency at n={}", 4 * t), d, pow2_family(t)?.deficiency()));
    }
    let rows = search::h_table(32, Some(&small_h(&reports)))?;
    for n in [16, 32] {
        let r = &rows[n - 3];
        out.push(Claim::new(
            format!("table gap at n={n}"),
            if n == 16 { ratio(8, 93) } else { ratio(16, 381) },
            r.upper.checked_sub(r.lower)?,
        ));
    }

    let mut bad = Vec::new();
    for l in Partition::all_up_to(12) {
        if staircase(l.n_min(), &l)?.h()? != l.h() {
            bad.push(l.to_string());
        }
    }
    out.push(Claim::new("h(staircase at N(λ)) = h(λ) for |λ|<=12", "[]", format!("{bad:?}")));

    let mut bad = Vec::new();
    for l in Partition::all_up_to(6) {
        let n = l.n_min();
        for c in (2..=3).filter(|c| c * n <= crate::graphs::MAX_CUT_SCAN_VERTICES) {
            let g = staircase(n, &l)?;
            let cg = g.blowup(c)?;
            let ok = cg.h()? == g.h()?.checked_mul_int(c as i128)?
                && cg.is_cut_minimal()?.is_ok()
                && cg == staircase(c * n, &l.blowup(c)?)?;
            if !ok {
                bad.push(format!("{l}x{c}"));
            }
        }
    }
    out.push(Claim::new("blowups of staircases, |λ|<=6, c=2,3, cN(λ)<=32", "[]", format!("{bad:?}")));

    for n in 3..=7 {
        let r = search::mw_sweep(n)?;
        out.push(Claim::new(
            format!("MW certificate on all cut-minimal classes, n={n}"),
            "ok",
            match r {
                Ok(_) => "ok".to_string(),
                Err(f) => f.to_hex(),
            },
        ));
    }

    for r in &reports {
        let c = conjectures_of(r);
        out.push(Claim::new(format!("Cheeger graphs triangle-free, n={}", r.n), "yes", yes(c.all_triangle_free)));
        out.push(Claim::new(format!("Cheeger graphs bipartite, n={}", r.n), "yes", yes(c.all_bipartite)));
        let allowed = if r.n == 4 { 1 } else { 0 };
        out.push(Claim::new(
            format!("Cheeger graphs without staircase form, n={}", r.n),
            allowed,
            c.staircase_exceptions.len(),
        ));
    }
    for t in 1..=3 {
        let n = 2 * t + 1;
        let form = canonical_form(&staircase(n, &cor(t)?)?)?.to_hex();
        let found = reports[n - 3].cheeger_graphs.iter().any(|g| g.form == form);
        out.push(Claim::new(format!("corner staircase is a Cheeger graph, n={n}"), "yes", yes(found)));
    }
    Ok(out)
}

fn expected_f(n: usize) -> &'static [usize] {
    match n {
        3 => &[3],
        4 => &[6, 3],
        _ => &[10, 45, 100, 10],
    }
}

fn expected_betti(n: usize) -> &'static [usize] {
    match n {
        3 => &[3],
        4 => &[3, 0],
        _ => &[1, 0, 54, 0],
    }
}

/// `h(n)` indexed by `n`, from search reports for `n = 3..=8`.
pub fn small_h(reports: &[SearchReport]) -> Vec<Rational> {
    let mut v = vec![Rational::ZERO; search::MAX_SEARCH_VERTICES + 1];
    for r in reports {
        v[r.n] = r.h_value;
    }
    v
}

