use crate::error::{Error, Result};

/// Variable names of a polynomial ring `Q[x_1, ..., x_t]`, in normal order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidSignature("need at least one variable".into()));
        }
        for (i, n) in names.iter().enumerate() {
            if !is_identifier(n) {
                return Err(Error::InvalidSignature(format!(
                    "`{n}` is not an identifier"
                )));
            }
            if names[..i].contains(n) {
                return Err(Error::InvalidSignature(format!("duplicate variable `{n}`")));
            }
        }
        Ok(Ring { names })
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_names() {
        assert!(Ring::new(["x", "y"]).is_ok());
        assert!(Ring::new(Vec::<String>::new()).is_err());
        assert!(Ring::new(["x", "x"]).is_err());
        assert!(Ring::new(["2x"]).is_err());
        assert_eq!(Ring::new(["x", "dx"]).unwrap().index_of("dx"), Some(1));
    }
}
