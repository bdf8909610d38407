fn main() {
    let path = arena::prompts::goldens::source_path();
    std::fs::write(&path, arena::prompts::goldens::render_all()).unwrap();
    println!("wrote {}", path.display());
}
