"""Command registry with metadata, descriptions, and examples for all CLI commands."""

COMMAND_REGISTRY = {
    "verification": {
        "description": "Check the maximal left ideal counterexample end to end",
        "commands": {
            "verify": {
                "full_name": "verify",
                "description": "Run conditions, properness, maximality trials and contraction analysis on an instance",
                "usage": "cli.py verify [--instance gf4|gaussian|custom] [--params FILE] [--trials N] [--enum-depth N]",
                "example": "cli.py --format json --seed 7 verify --instance gaussian --trials 200",
                "category": "verification",
            },
            "decide": {
                "full_name": "decide",
                "description": "Decide membership of one polynomial f(x, y) in M and print the witness",
                "usage": "cli.py decide <FILE> [--instance gf4|gaussian|custom] [--params FILE]",
                "example": "cli.py --format json decide f.json --instance gf4",
                "category": "verification",
            },
            "check-witness": {
                "full_name": "check-witness",
                "description": "Re-verify every witness stored in a verify report by expansion",
                "usage": "cli.py check-witness <REPORT> [--instance gf4|gaussian|custom] [--params FILE]",
                "example": "cli.py check-witness report.json --instance gf4",
                "category": "verification",
            },
        },
    },
    "quaternions": {
        "description": "Rational quaternion checks",
        "commands": {
            "remark-sweep": {
                "full_name": "remark-sweep",
                "description": "Randomized sweep showing no quaternion triple certifies all three conditions",
                "usage": "cli.py remark-sweep [--trials N] [--height H]",
                "example": "cli.py --seed 1 remark-sweep --trials 10000",
                "category": "quaternions",
            },
            "remark-check": {
                "full_name": "remark-check",
                "description": "Check one quaternion triple a, b, c given as [r, i, j, k] lists",
                "usage": "cli.py remark-check <A> <B> <C>",
                "example": "cli.py remark-check 0,1,0,0 0,-1,0,0 0,1,0,0",
                "category": "quaternions",
            },
        },
    },
    "documentation": {
        "description": "Documentation commands",
        "commands": {
            "commands": {
                "full_name": "docs commands",
                "description": "List all commands with descriptions and examples",
                "usage": "cli.py docs commands [--category CAT]",
                "example": "cli.py --format json docs commands",
                "category": "documentation",
            },
            "help": {
                "full_name": "docs help",
                "description": "Show detailed help for a command",
                "usage": "cli.py docs help <COMMAND>",
                "example": "cli.py docs help verify",
                "category": "documentation",
            },
        },
    },
}


def get_all_commands():
    """Get a flat list of all commands."""
    all_commands = []
    for category_name, category_data in COMMAND_REGISTRY.items():
        for cmd_data in category_data["commands"].values():
            all_commands.append({**cmd_data, "category": category_name})
    return all_commands


def get_command_by_name(full_name: str):
    """Get command metadata by full name (e.g., 'docs help')."""
    for category_data in COMMAND_REGISTRY.values():
        for cmd_data in category_data["commands"].values():
            if cmd_data["full_name"] == full_name:
                return cmd_data
    return None


def get_commands_by_category(category: str):
    """Get all commands in a category."""
    if category not in COMMAND_REGISTRY:
        return []
    return list(COMMAND_REGISTRY[category]["commands"].values())


def get_total_command_count():
    """Get total number of commands."""
    return sum(len(cat["commands"]) for cat in COMMAND_REGISTRY.values())
