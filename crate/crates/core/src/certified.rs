//! Three-valued answers carrying witnesses and the bound that was used.

/// Outcome of a bounded homological computation. `Yes`/`No` carry evidence;
/// `Undetermined` records the bound that was exhausted.
#[derive(Clone, Debug)]
pub enum Certified<Y, N> {
    Yes(Y),
    No(N),
    Undetermined { bound_used: usize, reason: String },
}

impl<Y, N> Certified<Y, N> {
    pub fn is_yes(&self) -> bool {
        matches!(self, Certified::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Certified::No(_))
    }

    pub fn is_undetermined(&self) -> bool {
        matches!(self, Certified::Undetermined { .. })
    }

    pub fn verdict(&self) -> &'static str {
        match self {
            Certified::Yes(_) => "yes",
            Certified::No(_) => "no",
            Certified::Undetermined { .. } => "undetermined",
        }
    }
}
