use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use super::element::{coset_weyl_ids, ElementSpec, TorusCoords};
use super::report::poly_json;
use super::SpectraError;
use crate::galois::{poly, Field, Polynomial};
use crate::linalg::hessenberg_charpoly_in_place;
use crate::reps::{CaseLabel, ExplicitRep};

/// Families of elements a search runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// `sigma t`
    SigmaT,
    /// `sigma n_w t` over the coset Weyl parts.
    SigmaWeylT,
    /// `t` in the torus.
    InnerT,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::SigmaT => "sigma_t",
            Family::SigmaWeylT => "sigma_weyl_t",
            Family::InnerT => "inner_t",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = SpectraError;

    fn from_str(s: &str) -> Result<Self, SpectraError> {
        [Family::SigmaT, Family::SigmaWeylT, Family::InnerT]
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| SpectraError::BadElement(format!("unknown family {}", s)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchVerdict {
    Exists,
    None,
    Unknown,
}

#[derive(Debug, Clone)]
pub struct SearchOptions {
    /// Maximum number of candidates to evaluate.
    pub budget: Option<u64>,
    /// Hits kept in the report; the total is always counted.
    pub max_hits: usize,
    /// Stop once this many hits are known. Stopping happens at fixed batch
    /// boundaries, so the tested count does not depend on the thread count.
    pub stop_after_hits: Option<u64>,
    /// Worker threads; `None` reads `SPECTRA_THREADS`.
    pub threads: Option<usize>,
    /// `D_4` only: run over all four root values instead of the slice
    /// `t_4 = 1` in epsilon coordinates.
    pub full_torus: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: None,
            max_hits: 16,
            stop_after_hits: None,
            threads: None,
            full_torus: false,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchHit {
    pub element: ElementSpec,
    pub charpoly: Polynomial,
}

#[derive(Debug, Clone)]
pub struct SearchReport {
    pub case: CaseLabel,
    pub q: u64,
    pub family: Family,
    pub family_scope: String,
    pub weyl_parts: Vec<String>,
    pub candidates_total: u64,
    pub candidates_tested: u64,
    pub exhaustive: bool,
    pub hits_total: u64,
    pub hits: Vec<SearchHit>,
    pub hits_truncated: bool,
    pub stopped_early: bool,
    /// No prediction exists for these parameters (D4 at q = 4 and 8).
    pub exploratory: bool,
    pub field: Field,
}

impl SearchReport {
    pub fn verdict(&self) -> SearchVerdict {
        if self.hits_total > 0 {
            SearchVerdict::Exists
        } else if self.exhaustive {
            SearchVerdict::None
        } else {
            SearchVerdict::Unknown
        }
    }

    pub fn to_json(&self) -> Value {
        let hits: Vec<Value> = self
            .hits
            .iter()
            .map(|h| {
                json!({
                    "element": h.element.to_json(&self.field),
                    "charpoly": poly_json(&h.charpoly, self.q),
                })
            })
            .collect();
        let weyl = if self.weyl_parts.len() <= 8 {
            json!(self.weyl_parts)
        } else {
            json!(format!("{} Weyl group elements", self.weyl_parts.len()))
        };
        json!({
            "case": self.case.as_str(),
            "q": self.q,
            "family": self.family.as_str(),
            "family_scope": self.family_scope,
            "weyl_parts": weyl,
            "candidates_total": self.candidates_total,
            "candidates_tested": self.candidates_tested,
            "exhaustive": self.exhaustive,
            "stopped_early": self.stopped_early,
            "hits_total": self.hits_total,
            "hits": hits,
            "hits_truncated": self.hits_truncated,
            "verdict": self.verdict(),
            "exploratory": self.exploratory,
        })
    }
}

/// Worker count from `SPECTRA_THREADS`, if set to a positive integer.
pub fn threads_from_env() -> Option<usize> {
    std::env::var("SPECTRA_THREADS")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
}

/// Chunks per scheduling batch; fixed so early stopping is deterministic.
const BATCH: usize = 64;

struct Ctx<'a> {
    rep: &'a ExplicitRep,
    family: Family,
    field: Field,
    dim: usize,
    prefixes: Vec<Vec<u64>>,
    weyl_ids: Vec<String>,
    units: Vec<u64>,
    rank: usize,
    per_weyl: u64,
    epsilon: bool,
}

impl Ctx<'_> {
    fn coords(&self, mut idx: u64) -> Vec<u64> {
        let n = self.units.len() as u64;
        let mut c = vec![0; self.rank];
        for slot in c.iter_mut().rev() {
            *slot = self.units[(idx % n) as usize];
            idx /= n;
        }
        c
    }

    fn torus(&self, coords: Vec<u64>) -> TorusCoords {
        if self.epsilon {
            TorusCoords::Epsilon(coords)
        } else {
            TorusCoords::Native(coords)
        }
    }

    fn element(&self, idx: u64) -> ElementSpec {
        let w = (idx / self.per_weyl) as usize;
        let torus = self.torus(self.coords(idx % self.per_weyl));
        let spec = ElementSpec::coset(self.rep.label(), &self.weyl_ids[w], torus);
        match self.family {
            Family::InnerT => ElementSpec { sigma_power: 0, ..spec },
            _ => spec,
        }
    }

    /// Charpoly coefficients of candidate `idx`, or `None` if not squarefree.
    fn evaluate(&self, idx: u64, buf: &mut Vec<u64>) -> Result<Option<Vec<u64>>, SpectraError> {
        let spec = self.element(idx);
        let native = spec.native_torus(&self.field)?;
        let diag = self.rep.torus_diagonal(&native)?;
        let prefix = &self.prefixes[(idx / self.per_weyl) as usize];
        let (f, n) = (&self.field, self.dim);
        buf.clear();
        for i in 0..n {
            for j in 0..n {
                buf.push(f.mul(prefix[i * n + j], diag[j]));
            }
        }
        let chi = hessenberg_charpoly_in_place(f, n, buf);
        let g = poly::gcd(f, &chi, &poly::derivative(f, &chi));
        Ok((g.len() == 1).then_some(chi))
    }
}

#[derive(Default)]
struct ChunkResult {
    tested: u64,
    hits_total: u64,
    hits: Vec<(u64, Vec<u64>)>,
}

fn run_chunk(ctx: &Ctx<'_>, range: std::ops::Range<u64>, keep: usize) -> Result<ChunkResult, SpectraError> {
    let mut out = ChunkResult::default();
    let mut buf = Vec::with_capacity(ctx.dim * ctx.dim);
    for idx in range {
        out.tested += 1;
        if let Some(chi) = ctx.evaluate(idx, &mut buf)? {
            out.hits_total += 1;
            if out.hits.len() < keep {
                out.hits.push((idx, chi));
            }
        }
    }
    Ok(out)
}

fn scope_text(family: Family, weyl: &[String], q: u64, rank: usize, epsilon: bool) -> String {
    let head = match family {
        Family::SigmaT => "sigma * t".to_string(),
        Family::InnerT => "t".to_string(),
        Family::SigmaWeylT if weyl.len() <= 8 => format!("sigma * n_w * t, w in {{{}}}", weyl.join(", ")),
        Family::SigmaWeylT => format!("sigma * n_w * t, w over all {} elements of W", weyl.len()),
    };
    let torus = if epsilon {
        format!("t = (t1, t2, t3, 1) in epsilon coordinates over GF({})^x", q)
    } else {
        format!("t over (GF({})^x)^{}", q, rank)
    };
    format!(
        "{}; {}; exhaustion covers this family only, not every element of the finite group",
        head, torus
    )
}

/// Squarefree-charpoly search over a family, in lexicographic order on
/// (Weyl index, torus coordinates); torus coordinates run over the units
/// of `GF(q)`, which must be a subfield of the module's field.
pub fn family_search(
    rep: &ExplicitRep,
    q: u64,
    family: Family,
    opts: &SearchOptions,
) -> Result<SearchReport, SpectraError> {
    let field = rep.field().clone();
    let sub = Field::gf(q)?;
    if field.size() % q != 0 || !field.in_subfield(sub.primitive(), q) {
        return Err(SpectraError::FieldMismatch(format!(
            "GF({}) is not a subfield of GF({})",
            q,
            field.size()
        )));
    }
    let weyl_ids: Vec<String> = match family {
        Family::SigmaWeylT => coset_weyl_ids(rep),
        _ => vec![rep.weyl_representatives()[0].id.clone()],
    };
    let sigma_power = if family == Family::InnerT { 0 } else { 1 };
    let sigma_pow = rep.sigma_matrix().pow(sigma_power);
    let prefixes = weyl_ids
        .iter()
        .map(|id| Ok(sigma_pow.mul(rep.weyl_eval(id)?).data().to_vec()))
        .collect::<Result<Vec<_>, SpectraError>>()?;
    let epsilon = rep.label() == CaseLabel::D4Char2 && !opts.full_torus;
    let rank = if epsilon { 3 } else { rep.torus_rank() };
    let units: Vec<u64> = sub.units().collect();
    let per_weyl = (units.len() as u64).pow(rank as u32);
    let total = per_weyl * weyl_ids.len() as u64;
    let limit = opts.budget.map_or(total, |b| b.min(total));
    let ctx = Ctx {
        rep,
        family,
        field: field.clone(),
        dim: rep.dim(),
        prefixes,
        weyl_ids: weyl_ids.clone(),
        units,
        rank,
        per_weyl,
        epsilon,
    };

    let chunk_len = (per_weyl / ctx.units.len() as u64).max(1);
    let chunks: Vec<std::ops::Range<u64>> = (0..limit.div_ceil(chunk_len))
        .map(|c| c * chunk_len..((c + 1) * chunk_len).min(limit))
        .collect();
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = opts.threads.or_else(threads_from_env) {
        builder = builder.num_threads(n);
    }
    let pool = builder
        .build()
        .map_err(|e| SpectraError::BadElement(format!("thread pool: {}", e)))?;

    let mut tested = 0u64;
    let mut hits_total = 0u64;
    let mut hits: Vec<(u64, Vec<u64>)> = Vec::new();
    let mut stopped_early = false;
    for batch in chunks.chunks(BATCH) {
        let results: Vec<Result<ChunkResult, SpectraError>> = pool.install(|| {
            batch
                .par_iter()
                .map(|r| run_chunk(&ctx, r.clone(), opts.max_hits))
                .collect()
        });
        for r in results {
            let r = r?;
            tested += r.tested;
            hits_total += r.hits_total;
            let room = opts.max_hits.saturating_sub(hits.len());
            hits.extend(r.hits.into_iter().take(room));
        }
        if opts.stop_after_hits.is_some_and(|n| hits_total >= n) && tested < total {
            stopped_early = true;
            break;
        }
    }

    let hits = hits
        .into_iter()
        .map(|(idx, chi)| SearchHit {
            element: ctx.element(idx),
            charpoly: Polynomial::new(&field, chi),
        })
        .collect();
    let report = SearchReport {
        case: rep.label(),
        q,
        family,
        family_scope: scope_text(family, &weyl_ids, q, rank, epsilon),
        weyl_parts: weyl_ids,
        candidates_total: total,
        candidates_tested: tested,
        exhaustive: tested == total,
        hits_truncated: hits_total > opts.max_hits as u64,
        hits_total,
        hits,
        stopped_early,
        exploratory: rep.label() == CaseLabel::D4Char2 && (q == 4 || q == 8),
        field,
    };
    if limit < total && !stopped_early {
        return Err(SpectraError::BudgetExceeded(Box::new(report)));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::build_a2_adjoint;

    #[test]
    fn a2_q7_family_contains_the_default_element() {
        let f = Field::gf(7).unwrap();
        let rep = build_a2_adjoint(&f).unwrap();
        let opts = SearchOptions {
            max_hits: 64,
            ..SearchOptions::default()
        };
        let r = family_search(&rep, 7, Family::SigmaWeylT, &opts).unwrap();
        assert_eq!(r.candidates_total, 36);
        assert!(r.exhaustive);
        assert_eq!(r.verdict(), SearchVerdict::Exists);
        assert!(r
            .hits
            .iter()
            .any(|h| h.element.torus == TorusCoords::Native(vec![3, 1])));
    }

    #[test]
    fn budget_and_thread_independence() {
        let f = Field::gf(7).unwrap();
        let rep = build_a2_adjoint(&f).unwrap();
        let opts = SearchOptions {
            budget: Some(10),
            ..SearchOptions::default()
        };
        let Err(SpectraError::BudgetExceeded(partial)) = family_search(&rep, 7, Family::SigmaWeylT, &opts) else {
            panic!("budget of 10 must be exceeded");
        };
        assert_eq!(partial.candidates_tested, 10);
        assert!(!partial.exhaustive);
        let one = SearchOptions {
            threads: Some(1),
            ..SearchOptions::default()
        };
        let two = SearchOptions {
            threads: Some(2),
            ..SearchOptions::default()
        };
        let a = family_search(&rep, 7, Family::SigmaWeylT, &one).unwrap().to_json();
        let b = family_search(&rep, 7, Family::SigmaWeylT, &two).unwrap().to_json();
        assert_eq!(a, b);
    }
}
