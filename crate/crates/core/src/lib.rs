#![no_std]

extern crate alloc;

pub mod scalar;
pub mod tensor;
pub mod hopf;
pub mod triplet;
pub mod diagram;
pub mod invariant;
