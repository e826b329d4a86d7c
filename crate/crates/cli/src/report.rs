use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    Special,
    Exceptional,
    NotSpecial,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::Special => "special",
            Verdict::Exceptional => "exceptional",
            Verdict::NotSpecial => "not-special",
        }
    }

    pub fn from_bool(ok: bool) -> Self {
        if ok { Verdict::Holds } else { Verdict::Fails }
    }
}

pub enum Outcome {
    Success,
    Failure,
}

/// Text lines and JSON fields built side by side. The text starts with the
/// `verdict=` line when there is a verdict.
pub struct Report {
    verdict: Option<Verdict>,
    lines: Vec<String>,
    fields: Map<String, Value>,
}

impl Report {
    pub fn new(verdict: Option<Verdict>) -> Self {
        let mut fields = Map::new();
        if let Some(v) = verdict {
            fields.insert("verdict".into(), json!(v.name()));
        }
        Report { verdict, lines: Vec::new(), fields }
    }

    pub fn line(&mut self, text: impl Into<String>) -> &mut Self {
        self.lines.push(text.into());
        self
    }

    pub fn field(&mut self, key: &str, value: Value) -> &mut Self {
        self.fields.insert(key.into(), value);
        self
    }

    pub fn outcome(&self) -> Outcome {
        match self.verdict {
            Some(Verdict::Fails | Verdict::Exceptional | Verdict::NotSpecial) => Outcome::Failure,
            _ => Outcome::Success,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(v) = self.verdict {
            out.push_str(&format!("verdict={}\n", v.name()));
        }
        for l in &self.lines {
            out.push_str(l);
            out.push('\n');
        }
        out
    }

    /// Keys come out sorted, so the report is byte-stable.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&Value::Object(self.fields.clone())).expect("plain JSON values");
        s.push('\n');
        s
    }
}
