"""Cosmetic robot names, generated from fixed syllable lists."""

FIRST_A = (
    "Gear", "Volt", "Cog", "Servo", "Rust", "Flux", "Bolt", "Piston",
    "Crank", "Dyno", "Axle", "Rotor", "Spring", "Chrome", "Quartz", "Torque",
)
FIRST_B = (
    "whirl", "spark", "walker", "grind", "hum", "clank", "drift", "spin",
    "weld", "shift", "crawler", "flick", "rattle", "buzz", "glide", "stomp",
)
SURNAME_A = (
    "Bot", "Mech", "Tin", "Iron", "Steel", "Wrench", "Rivet", "Socket",
    "Magnet", "Copper", "Nickel", "Zinc", "Cobalt", "Brass", "Alloy", "Solder",
)
SURNAME_B = (
    "son", "wright", "ford", "well", "field", "worth", "ham", "stead",
    "by", "ley", "den", "more", "vik", "dale", "gard", "holt",
)


def gen_names(rng, n: int) -> list:
    """n distinct robot names like 'Voltspark Wrenchson'."""
    names = []
    seen = set()
    for _ in range(n):
        while True:
            name = (
                rng.choice(FIRST_A) + rng.choice(FIRST_B)
                + " "
                + rng.choice(SURNAME_A) + rng.choice(SURNAME_B)
            )
            if name not in seen:
                break
        seen.add(name)
        names.append(name)
    return names
