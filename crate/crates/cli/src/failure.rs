use std::fmt;

/// A failed command and the exit code it maps to.
#[derive(Debug)]
pub enum Failure {
    /// Bad flags or configuration (64).
    Usage(String),
    /// Missing or unreadable input (2).
    Input(String),
    /// Nothing to explain (3).
    Degenerate(String),
}

impl Failure {
    pub fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 64,
            Failure::Input(_) => 2,
            Failure::Degenerate(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Input(m) | Failure::Degenerate(m) => f.write_str(m),
        }
    }
}

impl From<limelight::Error> for Failure {
    fn from(e: limelight::Error) -> Self {
        use limelight::Error as E;
        let msg = e.to_string();
        match e {
            E::InvalidConfig(_) => Failure::Usage(msg),
            E::EmptyInstance | E::SingularFit => Failure::Degenerate(msg),
            _ => Failure::Input(msg),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}
