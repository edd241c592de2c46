// Command-line front end: reads a quadratic split quaternion polynomial from
// flags or a JSON document on stdin, decides factorizability and prints a
// report.  Exit status: 0 factorizable, 1 not factorizable, 2 input error.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "splitquat/report.hpp"

namespace {

std::array<double, 4> parse_quadruple(const std::string& text, const std::string& name) {
    std::array<double, 4> out{};
    std::stringstream ss(text);
    std::string item;
    int count = 0;
    while (std::getline(ss, item, ',')) {
        if (count >= 4) throw CLI::ValidationError(name + ": expected 4 comma-separated numbers");
        try {
            out[static_cast<std::size_t>(count++)] = std::stod(item);
        } catch (const std::exception&) {
            throw CLI::ValidationError(name + ": cannot parse '" + item + "' as a number");
        }
    }
    if (count != 4) throw CLI::ValidationError(name + ": expected 4 comma-separated numbers");
    return out;
}

std::array<double, 4> json_quadruple(const nlohmann::json& j, const std::string& name) {
    if (!j.contains(name) || !j[name].is_array() || j[name].size() != 4)
        throw std::invalid_argument("json input: '" + name + "' must be an array of 4 numbers");
    std::array<double, 4> out{};
    for (int l = 0; l < 4; ++l) out[static_cast<std::size_t>(l)] = j[name][static_cast<std::size_t>(l)].get<double>();
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Factorization of quadratic split quaternion polynomials a t^2 + b t + c"};

    std::string a_text, b_text, c_text, format = "text";
    splitquat::JobSpec job;

    app.add_option("--a", a_text, "leading coefficient as w,x,y,z");
    app.add_option("--b", b_text, "linear coefficient as w,x,y,z");
    app.add_option("--c", c_text, "constant coefficient as w,x,y,z");
    app.add_option("--tolerance", job.tolerance, "zero-test epsilon (default 1e-9)");
    app.add_flag("--all", job.enumerate_all, "enumerate one witness per quadratic pairing");
    app.add_flag("--verify", job.verify, "attach independent numerical verification");
    app.add_option("--format", format, "output format: text | json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", job.seed, "seed for the oracle's deterministic starts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    job.format = (format == "json") ? splitquat::JobSpec::Format::Json
                                    : splitquat::JobSpec::Format::Text;

    try {
        if (a_text.empty() && b_text.empty() && c_text.empty()) {
            // JSON document on stdin: {"a":[...],"b":[...],"c":[...]}
            nlohmann::json doc;
            std::cin >> doc;
            job.a = json_quadruple(doc, "a");
            job.b = json_quadruple(doc, "b");
            job.c = json_quadruple(doc, "c");
        } else {
            job.a = parse_quadruple(a_text, "--a");
            job.b = parse_quadruple(b_text, "--b");
            job.c = parse_quadruple(c_text, "--c");
        }
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }

    try {
        const splitquat::Report report = splitquat::run(job);
        if (job.format == splitquat::JobSpec::Format::Json)
            std::cout << splitquat::to_json(report) << "\n";
        else
            std::cout << splitquat::to_text(report);
        return report.exit_code;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
