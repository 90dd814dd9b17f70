#include "tableau.hpp"

#include <cmath>
#include <sstream>

#include "error.hpp"

namespace bgode {

bg_tableau bg_tableau::classical4() {
    bg_tableau t;
    t.order = 4;
    t.a = 1.0 / 6.0;
    t.b = 1.0 / 3.0;
    t.c = 1.0 / 3.0;
    t.d = 1.0 / 6.0;
    t.p = 0.5;
    t.q = 0.5;
    t.p1 = 0.5;
    t.q1 = 0.0;
    t.q2 = 0.5;
    t.p2 = 1.0;
    t.q3 = 0.0;
    t.q4 = 0.0;
    t.q5 = 1.0;
    return t;
}

bg_tableau bg_tableau::trapezoidal2() {
    bg_tableau t;
    t.order = 2;
    t.a = 0.5;
    t.b = 0.5;
    t.p = 1.0;
    t.q = 1.0;
    return t;
}

bg_tableau bg_tableau::three_eighths4() {
    bg_tableau t;
    t.order = 4;
    t.a = 1.0 / 8.0;
    t.b = 3.0 / 8.0;
    t.c = 3.0 / 8.0;
    t.d = 1.0 / 8.0;
    t.p = 1.0 / 3.0;
    t.q = 1.0 / 3.0;
    t.p1 = 2.0 / 3.0;
    t.q1 = -1.0 / 3.0;
    t.q2 = 1.0;
    t.p2 = 1.0;
    t.q3 = 1.0;
    t.q4 = -1.0;
    t.q5 = 1.0;
    return t;
}

tableau_report validate_tableau(const bg_tableau& t) {
    tableau_report report;
    auto add = [&](const std::string& name, double residual) {
        tableau_condition c;
        c.name = name;
        c.residual = std::fabs(residual);
        c.pass = c.residual < tableau_tolerance;
        report.conditions.push_back(c);
    };

    if (t.order == 2) {
        add("a+b=1", t.a + t.b - 1.0);
        add("p*b=1/2", t.p * t.b - 0.5);
        add("q*b=1/2", t.q * t.b - 0.5);
    } else if (t.order == 4) {
        add("p=q", t.p - t.q);
        add("p1=q1+q2", t.p1 - (t.q1 + t.q2));
        add("p2=q3+q4+q5", t.p2 - (t.q3 + t.q4 + t.q5));
        add("a+b+c+d=1", t.a + t.b + t.c + t.d - 1.0);
        add("b*p+c*p1+d*p2=1/2", t.b * t.p + t.c * t.p1 + t.d * t.p2 - 0.5);
        add("b*p^2+c*p1^2+d*p2^2=1/3",
            t.b * t.p * t.p + t.c * t.p1 * t.p1 + t.d * t.p2 * t.p2 -
                1.0 / 3.0);
    } else {
        add("order in {2,4}", 1.0);
    }

    report.ok = true;
    for (const auto& c : report.conditions) {
        report.ok = report.ok && c.pass;
    }
    return report;
}

void require_valid(const bg_tableau& t) {
    const tableau_report report = validate_tableau(t);
    if (report.ok) {
        return;
    }
    std::ostringstream msg;
    msg << "tableau violates order conditions:";
    for (const auto& c : report.conditions) {
        if (!c.pass) {
            msg << " [" << c.name << " residual " << c.residual << "]";
        }
    }
    fail(status::invalid_argument, msg.str());
}

bg_tableau parse_tableau_text(const std::string& text) {
    bg_tableau t;
    t.order = 4;
    std::istringstream lines(text);
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            fail(status::invalid_argument,
                 "tableau line " + std::to_string(lineno) +
                     " is not key=value: '" + line + "'");
        }
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return (b == std::string::npos) ? std::string()
                                            : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        double* slot = nullptr;
        if (key == "a") slot = &t.a;
        else if (key == "b") slot = &t.b;
        else if (key == "c") slot = &t.c;
        else if (key == "d") slot = &t.d;
        else if (key == "p") slot = &t.p;
        else if (key == "q") slot = &t.q;
        else if (key == "p1") slot = &t.p1;
        else if (key == "p2") slot = &t.p2;
        else if (key == "q1") slot = &t.q1;
        else if (key == "q2") slot = &t.q2;
        else if (key == "q3") slot = &t.q3;
        else if (key == "q4") slot = &t.q4;
        else if (key == "q5") slot = &t.q5;

        try {
            if (slot != nullptr) {
                std::size_t used = 0;
                *slot = std::stod(value, &used);
                if (used != value.size()) {
                    throw std::invalid_argument(value);
                }
            } else if (key == "order") {
                t.order = std::stoi(value);
            } else {
                fail(status::invalid_argument,
                     "unknown tableau key '" + key + "' on line " +
                         std::to_string(lineno));
            }
        } catch (const error&) {
            throw;
        } catch (const std::exception&) {
            fail(status::invalid_argument,
                 "bad numeric value '" + value + "' for tableau key '" + key +
                     "'");
        }
    }
    return t;
}

}  // namespace bgode
