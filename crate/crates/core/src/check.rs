use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Conjectural statement: recorded, never counted as a failure.
    Exploratory,
}

/// Outcome of one named verification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    /// Whether the checked statement held, also for exploratory checks.
    pub holds: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, holds: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: if holds { Status::Pass } else { Status::Fail },
            holds,
            detail: detail.into(),
        }
    }

    pub fn exploratory(name: impl Into<String>, holds: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: Status::Exploratory,
            holds,
            detail: detail.into(),
        }
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}
