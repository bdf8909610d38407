pub mod engine;
pub mod games;
pub mod prompts;
pub mod solvers;
