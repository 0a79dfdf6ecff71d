use serde::Serialize;

/// A single piece of evidence attached to a check: the elements involved
/// and a human-readable account of what they show.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub elements: Vec<usize>,
    pub description: String,
}

impl Witness {
    pub fn new(elements: Vec<usize>, description: impl Into<String>) -> Self {
        Witness { elements, description: description.into() }
    }
}

/// Named sub-verdict, used when a check evaluates several equivalent forms
/// of a law independently.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Part {
    pub name: String,
    pub verdict: bool,
}

/// Outcome of one property check. A failed check always carries at least one
/// witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub property: String,
    pub verdict: bool,
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<Part>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

impl CheckReport {
    pub fn pass(property: impl Into<String>) -> Self {
        CheckReport {
            property: property.into(),
            verdict: true,
            witnesses: Vec::new(),
            parts: Vec::new(),
            warnings: Vec::new(),
        }
    }

    /// Builds a report whose verdict is `witnesses.is_empty()`.
    pub fn from_witnesses(property: impl Into<String>, witnesses: Vec<Witness>) -> Self {
        CheckReport {
            property: property.into(),
            verdict: witnesses.is_empty(),
            witnesses,
            parts: Vec::new(),
            warnings: Vec::new(),
        }
    }

    #[track_caller]
    pub fn fail(property: impl Into<String>, witnesses: Vec<Witness>) -> Self {
        assert!(!witnesses.is_empty(), "a failed check needs a witness");
        Self::from_witnesses(property, witnesses)
    }

    pub fn with_part(mut self, name: impl Into<String>, verdict: bool) -> Self {
        self.parts.push(Part { name: name.into(), verdict });
        self
    }

    pub fn first_witness(&self) -> Option<&Witness> {
        self.witnesses.first()
    }

    pub fn part(&self, name: &str) -> Option<bool> {
        self.parts.iter().find(|p| p.name == name).map(|p| p.verdict)
    }
}
