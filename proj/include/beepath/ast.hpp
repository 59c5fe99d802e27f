#ifndef BEEPATH_AST_HPP
#define BEEPATH_AST_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace beepath {

/// Reference to either an activity (by name, unquoted) or a subprocess
/// (by identifier, without parentheses).
struct ActRef {
    enum class Kind { Activity, Subprocess };
    Kind kind = Kind::Activity;
    std::string name;

    static ActRef activity(std::string n) { return {Kind::Activity, std::move(n)}; }
    static ActRef subprocess(std::string n) { return {Kind::Subprocess, std::move(n)}; }
    bool is_activity() const { return kind == Kind::Activity; }
};

inline bool operator==(const ActRef& a, const ActRef& b) {
    return a.kind == b.kind && a.name == b.name;
}

enum class FragmentKind {
    Sequence,
    ParallelSplit,
    Synchronization,
    ExclusiveChoice,
    SimpleMerge,
    RepeatSince,
    Eventually,
    AndSplitInXorSplit,
    XorSplitInAndSplit,
    AndJoinInXorJoin,
    XorJoinInAndJoin,
    AndSubprocess,
    OrSubprocess,
};

std::string_view fragment_kind_name(FragmentKind k);
std::optional<FragmentKind> fragment_kind_from_name(std::string_view name);

/// One statement of the description body.
///
/// Argument order follows the surface syntax: splits carry the source first
/// and then the branch targets; joins carry the sources first and the target
/// last; repeat-since carries source, repeat target, then continuations.
/// Subprocess declarations carry their members in `args` and the declared
/// identifier in `subprocess_id`.
struct Fragment {
    FragmentKind kind = FragmentKind::Sequence;
    std::vector<ActRef> args;
    std::optional<std::string> subprocess_id;
    int line = 1;
    int column = 1;
};

enum class ClosingMode { Single, Conjunctive, Disjunctive };

std::string_view closing_mode_name(ClosingMode m);
std::optional<ClosingMode> closing_mode_from_name(std::string_view name);

struct ClosingStatement {
    ClosingMode mode = ClosingMode::Single;
    std::vector<ActRef> args;
    int line = 1;
    int column = 1;
};

/// Parse tree of a whole description: leading text, initial statement,
/// fragment statements in source order, closing statement.
struct Description {
    std::string leading_text;
    std::string initial;
    std::vector<Fragment> fragments;
    ClosingStatement closing;
};

/// Structural equality ignores source positions.
bool structurally_equal(const Fragment& a, const Fragment& b);
bool structurally_equal(const ClosingStatement& a, const ClosingStatement& b);
bool structurally_equal(const Description& a, const Description& b);

/// The closed-world disclaimer that every description must start with.
std::string_view leading_text_literal();

}  // namespace beepath

#endif
