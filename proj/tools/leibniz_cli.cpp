#include <iostream>

#include "leibniz/api.hpp"
#include "leibniz/io.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    leibniz::RunResult result = leibniz::run_command(args);
    const std::string text = leibniz::render(result);
    if (result.output_path.empty()) {
        std::cout << text;
    } else {
        try {
            leibniz::write_text_file(result.output_path, text);
        } catch (const leibniz::Error& e) {
            std::cerr << e.what() << "\n";
            return 3;
        }
    }
    if (result.report.contains("error") && result.report["error"].is_object())
        std::cerr << result.report["error"].value("kind", "") << ": " << result.report["error"].value("message", "") << "\n";
    return result.exit_code;
}
