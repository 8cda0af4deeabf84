// ctxcalc: REPL and batch evaluator for the context calculus.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <unistd.h>

#include "CLI11.hpp"
#include "ctxcalc/ctxcalc.hpp"

namespace {

enum ExitStatus {
    ExitOk = 0,
    ExitSyntax = 1,    // lex or parse error
    ExitStatic = 2,    // static semantic error (or warning under --strict)
    ExitRuntime = 3,   // dynamic error in any statement
    ExitIo = 4,        // unreadable input file
    ExitUsage = 64,    // bad command line
};

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

struct Session {
    ctxcalc::Environment env;
    bool structured = false;
    bool strict = false;
    bool color = false;

    void report(const ctxcalc::Diagnostic& d) {
        std::cerr << ctxcalc::render_diagnostic(d, color) << "\n";
    }

    void print_value(const ctxcalc::Value& v) {
        std::cout << (structured ? ctxcalc::render_structured(v)
                                 : ctxcalc::render_text(v))
                  << "\n";
    }

    // parse -> static check -> evaluate; one result line per expression
    // statement. Returns the exit status the unit earned.
    int run_source(const std::string& source) {
        ctxcalc::ParseResult parsed = ctxcalc::parse_source(source);
        if (!parsed.ok()) {
            for (const auto& d : parsed.errors) report(d);
            return ExitSyntax;
        }

        bool blocked = false;
        for (const auto& d : ctxcalc::check_static(parsed.program, env)) {
            report(d);
            if (d.severity == ctxcalc::Severity::Error || strict) blocked = true;
        }
        if (blocked) return ExitStatic;

        int status = ExitOk;
        for (const auto& r : ctxcalc::eval_program(env, parsed.program)) {
            if (r.error) {
                report(*r.error);
                status = ExitRuntime;
            } else if (r.value) {
                print_value(*r.value);
            }
        }
        return status;
    }
};

int run_file(Session& session, const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        session.report({ctxcalc::Severity::Error, ctxcalc::ErrorCode::IoError,
                        "cannot read '" + path + "'", {}});
        return ExitIo;
    }
    std::ostringstream content;
    content << in.rdbuf();
    return session.run_source(content.str());
}

void repl_help() {
    std::cout << "commands: :dims  :bindings  :load <file>  :format [text|structured]"
                 "  :quit\n";
}

// Returns false when the session should end.
bool repl_command(Session& session, const std::string& line) {
    std::istringstream words(line);
    std::string command, argument;
    words >> command;
    std::getline(words, argument);
    argument = trim(argument);

    if (command == ":quit" || command == ":q") return false;
    if (command == ":help") {
        repl_help();
    } else if (command == ":dims") {
        for (const auto& name : session.env.dimension_order()) {
            const ctxcalc::TagSet* ts = session.env.find_dimension(name);
            const auto props = ts->properties();
            std::cout << name << " : " << ts->describe() << " ("
                      << (props.ordered ? "ordered" : "unordered") << ", "
                      << (props.finite ? "finite" : "infinite") << ")\n";
        }
    } else if (command == ":bindings") {
        for (const auto& name : session.env.binding_order()) {
            std::cout << name << " = ";
            session.print_value(*session.env.find_binding(name));
        }
    } else if (command == ":load") {
        if (argument.empty()) {
            std::cerr << "usage: :load <file>\n";
        } else {
            run_file(session, argument);
        }
    } else if (command == ":format") {
        if (argument == "text") {
            session.structured = false;
        } else if (argument == "structured") {
            session.structured = true;
        } else if (argument.empty()) {
            std::cout << (session.structured ? "structured" : "text") << "\n";
        } else {
            std::cerr << "usage: :format [text|structured]\n";
        }
    } else {
        std::cerr << "unknown command '" << command << "'\n";
        repl_help();
    }
    return true;
}

int run_repl(Session& session) {
    const bool tty = isatty(fileno(stdin)) != 0;
    if (tty) {
        std::cout << "ctxcalc: context calculus evaluator (:help for commands)\n";
    }
    std::string line;
    while (true) {
        if (tty) std::cout << "ctx> " << std::flush;
        if (!std::getline(std::cin, line)) break;
        line = trim(line);
        if (line.empty()) continue;
        if (line[0] == ':') {
            if (!repl_command(session, line)) break;
            continue;
        }
        // Errors are reported and the session carries on.
        session.run_source(line);
    }
    return ExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ctxcalc: evaluator for typed tag sets and the context calculus"};
    app.get_formatter()->column_width(28);

    std::string eval_text;
    std::string file_path;
    std::string format = "text";
    bool strict = false;

    auto* eval_opt =
        app.add_option("--eval", eval_text, "Evaluate the given statements and exit");
    auto* file_opt =
        app.add_option("--file", file_path, "Evaluate a .ctx source file and exit");
    app.add_option("--format", format, "Output format: text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
    app.add_flag("--strict", strict, "Treat warnings as errors");
    eval_opt->excludes(file_opt);
    file_opt->excludes(eval_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ExitOk : ExitUsage;
    }

    Session session;
    session.structured = format == "structured";
    session.strict = strict;
    session.color = isatty(fileno(stderr)) != 0 && std::getenv("NO_COLOR") == nullptr;

    if (!eval_text.empty() || eval_opt->count() > 0) return session.run_source(eval_text);
    if (!file_path.empty()) return run_file(session, file_path);
    return run_repl(session);
}
