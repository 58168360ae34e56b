//! JSON front end for the smoothness decision procedure.
//!
//! Every command returns a [`Response`] carrying the exit code and the text
//! for stdout, so the binary stays a thin wrapper.

pub mod input;
pub mod output;

use std::time::Instant;

use serde_json::{json, Value};

use smoothwm::model::{full_weight_monoid, has_smooth_model};
use smoothwm::smoothness::decide_smooth;
use smoothwm::sphericalroots::enumerate_sigma_sc;

use input::{datum_from_type_string, monoid_error, InputDocument, IsogenyKind};
use output::{render_json, ModelDoc, OutputDocument, SigmaScDocument};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Json,
    Explain,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    pub format: Format,
    pub require_verdict: bool,
    pub timings: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Response {
    pub code: i32,
    pub stdout: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub kind: &'static str,
    pub detail: String,
}

impl CliError {
    pub fn parse(detail: String) -> Self {
        CliError { code: EXIT_INPUT, kind: "parse", detail }
    }

    pub fn validation(detail: String) -> Self {
        CliError { code: EXIT_INPUT, kind: "validation", detail }
    }

    pub fn unsupported(detail: String) -> Self {
        CliError { code: EXIT_UNSUPPORTED, kind: "unsupported", detail }
    }

    pub fn respond(&self, opts: &Options) -> Response {
        let stdout = match opts.format {
            Format::Json => render_json(&json!({ "error": self.kind, "detail": self.detail })),
            Format::Explain => format!("error ({}): {}\n", self.kind, self.detail),
        };
        Response { code: self.code, stdout }
    }
}

fn finish(result: Result<String, CliError>, opts: &Options) -> Response {
    match result {
        Ok(stdout) => Response { code: EXIT_OK, stdout },
        Err(e) => e.respond(opts),
    }
}

fn render(doc: &OutputDocument, opts: &Options) -> String {
    match opts.format {
        Format::Json => doc.to_json(),
        Format::Explain => doc.to_explain(),
    }
}

fn millis(start: Instant) -> Value {
    json!((start.elapsed().as_secs_f64() * 1000.0 * 1000.0).round() / 1000.0)
}

/// `check`: decide smoothness for a monoid given as an input document.
pub fn cmd_check(text: &str, opts: &Options) -> Response {
    let run = || {
        let start = Instant::now();
        let doc = InputDocument::parse(text)?;
        let m = doc.monoid()?;
        let parsed = millis(start);
        let start = Instant::now();
        let verdict = decide_smooth(&m);
        let decided = millis(start);
        if opts.require_verdict && verdict.smooth.is_none() {
            return Err(CliError::unsupported("the monoid is not G-saturated, so no verdict is available".into()));
        }
        let mut out = OutputDocument::from_verdict(m.datum(), &verdict);
        if opts.timings {
            out.timings_ms = Some(json!({ "parse": parsed, "decide": decided }));
        }
        Ok(render(&out, opts))
    };
    finish(run(), opts)
}

/// `model`: decide whether `Λ+` is the weight monoid of a smooth variety.
pub fn cmd_model(type_string: &str, isogeny: IsogenyKind, torus_rank: usize, opts: &Options) -> Response {
    let run = || {
        let d = datum_from_type_string(type_string, isogeny, torus_rank)?;
        let start = Instant::now();
        let generators = full_weight_monoid(&d).map_err(monoid_error)?.generators().to_vec();
        let report = has_smooth_model(&d).map_err(monoid_error)?;
        let mut out = OutputDocument::from_verdict(&d, &report.verdict);
        out.model = Some(ModelDoc {
            type_string: canonical_type_string(&d),
            isogeny: isogeny.as_str().to_string(),
            generators,
            factor_rule: report.factor_rule,
        });
        if opts.timings {
            out.timings_ms = Some(json!({ "decide": millis(start) }));
        }
        Ok(render(&out, opts))
    };
    finish(run(), opts)
}

/// `sigma-sc`: list the spherically closed spherical roots of the group.
pub fn cmd_sigma_sc(type_string: &str, isogeny: IsogenyKind, torus_rank: usize, opts: &Options) -> Response {
    let run = || {
        let d = datum_from_type_string(type_string, isogeny, torus_rank)?;
        let roots = enumerate_sigma_sc(&d);
        let doc = SigmaScDocument::new(canonical_type_string(&d), isogeny.as_str().to_string(), &d, &roots);
        Ok(match opts.format {
            Format::Json => doc.to_json(),
            Format::Explain => doc.to_explain(),
        })
    };
    finish(run(), opts)
}

fn canonical_type_string(d: &smoothwm::rootdata::BasedRootDatum) -> String {
    d.component_types().iter().map(|t| t.to_string()).collect::<Vec<_>>().join("x")
}
