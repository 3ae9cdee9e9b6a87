//! Output in the three formats. Everything is assembled first and written
//! once, so reports from parallel jobs come out in input order.

use crate::Format;
use anyhow::bail;
use homshift::covers::CoverSet;
use homshift::io;
use homshift::linear_quotients::{LinearQuotientOrder, OrderFailure, WpmViolation};
use homshift::monomial::{MonomialIdeal, VarOrder};
use homshift::pipelines::{Status, TheoremReport};
use homshift::resolution::BettiTable;
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::io::Write as _;

pub struct Out {
    format: Format,
}

fn emit(text: &str) -> anyhow::Result<()> {
    let mut stdout = std::io::stdout().lock();
    let written = stdout.write_all(text.as_bytes()).and_then(|()| {
        if text.ends_with('\n') {
            Ok(())
        } else {
            stdout.write_all(b"\n")
        }
    });
    match written {
        // a closed pipe (`| head`) is not worth an error
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        other => Ok(other?),
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize")
}

fn list(ideal: &MonomialIdeal) -> String {
    if ideal.is_zero() {
        "0".into()
    } else {
        format!("<{}>", ideal.format_generators().join(", "))
    }
}

impl Out {
    pub fn new(format: Format) -> Out {
        Out { format }
    }

    fn no_csv(&self, what: &str) -> anyhow::Result<()> {
        if self.format == Format::Csv {
            bail!("csv output is only available for `betti` and `covers`, not `{what}`");
        }
        Ok(())
    }

    pub fn json_only(&self, what: &str, doc: &Value) -> anyhow::Result<()> {
        self.no_csv(what)?;
        emit(&pretty(doc))
    }

    pub fn covers(&self, covers: &CoverSet, ideal: &MonomialIdeal) -> anyhow::Result<()> {
        match self.format {
            Format::Json => emit(&pretty(&io::covers_to_json(covers, ideal))),
            Format::Csv => {
                let mut s = String::from("cover\n");
                for c in covers.labels() {
                    let _ = writeln!(s, "{}", c.join(" "));
                }
                emit(&s)
            }
            Format::Human => {
                let mut s = format!("{} minimal vertex covers\n", covers.len());
                for c in covers.labels() {
                    let _ = writeln!(s, "  {{{}}}", c.join(", "));
                }
                let _ = write!(s, "J(G) = {}", list(ideal));
                emit(&s)
            }
        }
    }

    pub fn ideal(&self, ideal: &MonomialIdeal) -> anyhow::Result<()> {
        self.no_csv("ideal")?;
        match self.format {
            Format::Human => emit(&list(ideal)),
            _ => emit(&pretty(&io::ideal_to_json(ideal))),
        }
    }

    /// Both routes side by side; `Ok(false)` on a mismatch.
    pub fn comparison(&self, k: usize, oracle: &MonomialIdeal, linquot: &MonomialIdeal) -> anyhow::Result<bool> {
        self.no_csv("hs")?;
        let ring = oracle.ring();
        let missing = |a: &MonomialIdeal, b: &MonomialIdeal| -> Vec<String> {
            a.generators()
                .iter()
                .filter(|m| !b.generators().contains(m))
                .map(|m| ring.format(m))
                .collect()
        };
        let only_oracle = missing(oracle, linquot);
        let only_linquot = missing(linquot, oracle);
        let equal = oracle == linquot;
        match self.format {
            Format::Human => {
                let mut s = format!("HS_{k} = {}\n", list(oracle));
                if equal {
                    s.push_str("routes agree: oracle == linquot");
                } else {
                    let _ = writeln!(s, "routes DISAGREE");
                    let _ = writeln!(s, "  linquot:      {}", list(linquot));
                    let _ = writeln!(s, "  only oracle:  {}", only_oracle.join(", "));
                    let _ = write!(s, "  only linquot: {}", only_linquot.join(", "));
                }
                emit(&s)?;
            }
            _ => emit(&pretty(&json!({
                "k": k,
                "equal": equal,
                "oracle": io::ideal_to_json(oracle),
                "linquot": io::ideal_to_json(linquot),
                "only_oracle": only_oracle,
                "only_linquot": only_linquot,
            })))?,
        }
        Ok(equal)
    }

    pub fn betti(&self, table: &BettiTable) -> anyhow::Result<()> {
        match self.format {
            Format::Json => emit(&pretty(&io::betti_to_json(table))),
            Format::Csv => emit(&io::betti_to_csv(table)),
            Format::Human => {
                let mut s = String::new();
                for e in table.entries() {
                    let _ = writeln!(s, "beta_{},{} = {}", e.k, table.ring().format(&e.multidegree), e.beta);
                }
                match (table.projective_dimension(), table.regularity()) {
                    (Ok(pd), Ok(reg)) => {
                        let _ = write!(s, "pd = {pd}, reg = {reg}");
                    }
                    _ => s.push_str("zero ideal"),
                }
                emit(&s)
            }
        }
    }

    /// `Ok(true)` iff no check failed.
    pub fn reports(&self, reports: &[TheoremReport]) -> anyhow::Result<bool> {
        self.no_csv("report")?;
        let passed = reports.iter().all(TheoremReport::passed);
        match self.format {
            Format::Json if reports.len() == 1 => emit(&pretty(&serde_json::to_value(&reports[0])?))?,
            Format::Json => emit(&pretty(&json!({ "passed": passed, "reports": reports })))?,
            _ => {
                let mut s = String::new();
                for r in reports {
                    human_report(&mut s, r);
                }
                if reports.len() > 1 {
                    let ok = reports.iter().filter(|r| r.passed()).count();
                    let _ = write!(s, "{ok}/{} reports passed", reports.len());
                }
                emit(&s)?;
            }
        }
        Ok(passed)
    }

    pub fn order(&self, order: Option<&LinearQuotientOrder>) -> anyhow::Result<bool> {
        self.no_csv("find-lq")?;
        match (self.format, order) {
            (Format::Human, None) => emit("no order with linear quotients")?,
            (Format::Human, Some(o)) => {
                let ring = o.ideal().ring();
                let mut s = String::from("linear quotients:\n");
                for (j, m) in o.sequence().iter().enumerate() {
                    let _ = writeln!(s, "  {:>3}. {}  set = {{{}}}", j + 1, ring.format(m), o.set_names(j).join(", "));
                }
                emit(&s)?;
            }
            (_, None) => emit(&pretty(&json!({ "found": false })))?,
            (_, Some(o)) => {
                let mut doc = io::order_to_json(o);
                doc["found"] = json!(true);
                emit(&pretty(&doc))?;
            }
        }
        Ok(order.is_some())
    }

    pub fn order_failure(&self, ideal: &MonomialIdeal, f: &OrderFailure) -> anyhow::Result<bool> {
        self.no_csv("find-lq")?;
        let ring = ideal.ring();
        match self.format {
            Format::Human => emit(&format!(
                "no linear quotients: position {} ({}) has colon generator {}",
                f.position,
                ring.format(&f.generator),
                ring.format(&f.witness)
            ))?,
            _ => emit(&pretty(&json!({ "found": false, "failure": io::failure_to_json(ring, f) })))?,
        }
        Ok(false)
    }

    pub fn wpm(
        &self,
        ideal: &MonomialIdeal,
        order: Option<&VarOrder>,
        violation: Option<&WpmViolation>,
    ) -> anyhow::Result<()> {
        self.no_csv("check-wpm")?;
        let ring = ideal.ring();
        let names = order.map(|o| o.as_slice().iter().map(|&i| ring.name(i).to_string()).collect::<Vec<_>>());
        let holds = order.is_some() && violation.is_none();
        let violation_doc = violation.map(|v| {
            json!({ "u": ring.format(&v.u), "v": ring.format(&v.v), "t": ring.name(v.t) })
        });
        match self.format {
            Format::Human => {
                let mut s = format!("ideal {}\n", list(ideal));
                match (&names, violation) {
                    (None, _) => s.push_str("not weakly polymatroidal under any variable order"),
                    (Some(n), None) => {
                        let _ = write!(s, "weakly polymatroidal under {}", n.join(" > "));
                    }
                    (Some(n), Some(v)) => {
                        let _ = write!(
                            s,
                            "not weakly polymatroidal under {}: u = {}, v = {}, t = {}",
                            n.join(" > "),
                            ring.format(&v.u),
                            ring.format(&v.v),
                            ring.name(v.t)
                        );
                    }
                }
                emit(&s)
            }
            _ => emit(&pretty(&json!({
                "ideal": io::ideal_to_json(ideal),
                "order": names,
                "weakly_polymatroidal": holds,
                "violation": violation_doc,
            }))),
        }
    }
}

fn human_report(s: &mut String, r: &TheoremReport) {
    let mode = r.mode.map_or(String::new(), |m| format!(" [{}]", m.name()));
    let _ = writeln!(s, "{}{mode}: {}", r.subject, if r.passed() { "PASS" } else { "FAIL" });
    for c in &r.checks {
        let tag = match c.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skipped => "skip",
        };
        let mut line = format!("  {tag} {}", c.name);
        if let Some(k) = c.k {
            let _ = write!(line, " k={k}");
        }
        if let Some(route) = c.route {
            let _ = write!(line, " via {}", serde_json::to_value(route).unwrap_or_default().as_str().unwrap_or(""));
        }
        if c.status != Status::Pass && !c.witness.is_null() {
            let _ = write!(line, ": {}", c.witness);
        }
        let _ = writeln!(s, "{line}");
    }
    for (key, value) in &r.observations {
        let _ = writeln!(s, "  note {key} = {value}");
    }
}
