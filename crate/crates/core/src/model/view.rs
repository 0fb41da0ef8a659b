use crate::digest::Digest;

use super::{Hypernetwork, Identifier};

/// A read-only hypernetwork derived from a backcloth.
///
/// `boundary` is set for projections and absent for operator results and
/// view comparisons.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct View {
    base_digest: Digest,
    boundary: Option<Identifier>,
    content: Hypernetwork,
}

impl View {
    pub(crate) fn new(
        base_digest: Digest,
        boundary: Option<Identifier>,
        content: Hypernetwork,
    ) -> Self {
        View {
            base_digest,
            boundary,
            content,
        }
    }

    pub fn base_digest(&self) -> &Digest {
        &self.base_digest
    }

    pub fn boundary(&self) -> Option<&Identifier> {
        self.boundary.as_ref()
    }

    pub fn content(&self) -> &Hypernetwork {
        &self.content
    }

    pub fn into_content(self) -> Hypernetwork {
        self.content
    }
}
