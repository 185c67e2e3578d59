use serde::Serialize;
use serde_json::Value;
use sl2_blocks::FiltrationKind;

/// Where an expected value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    /// Published reference data.
    Reference,
    /// A closed-form expression in `p`, `ω`.
    Formula,
    /// An algebraic identity that must hold exactly.
    Identity,
    /// An independent computation.
    Oracle,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: Value,
    pub source: Source,
    pub computed: Value,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockRow {
    pub label: String,
    pub omega: Option<u32>,
    pub alpha: String,
    pub dim: usize,
    pub coinvariant_dim: usize,
    /// Coefficients of the idempotent as a polynomial in `c`, lowest first.
    pub idempotent: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub block: String,
    pub kind: FiltrationKind,
    pub cumulative: Vec<usize>,
    pub graded: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub p: u32,
    pub chi: String,
    pub a: Option<u32>,
    pub blocks: Vec<BlockRow>,
    pub tables: Vec<TableRow>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(command: &str, p: u32, chi: &str, a: Option<u32>) -> Self {
        Report {
            command: command.to_string(),
            p,
            chi: chi.to_string(),
            a,
            blocks: Vec::new(),
            tables: Vec::new(),
            checks: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// Records a check; it passes iff both sides serialize to the same value.
    pub fn check<T: Serialize + ?Sized, U: Serialize + ?Sized>(
        &mut self,
        name: impl Into<String>,
        source: Source,
        expected: &T,
        computed: &U,
    ) {
        let expected = serde_json::to_value(expected).expect("serializable");
        let computed = serde_json::to_value(computed).expect("serializable");
        self.checks.push(Check {
            name: name.into(),
            pass: expected == computed,
            expected,
            source,
            computed,
        });
    }
}
