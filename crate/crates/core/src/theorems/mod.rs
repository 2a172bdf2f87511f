//! Statement catalog and instance sweeps (under construction).
