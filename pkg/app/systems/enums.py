from enum import StrEnum


class SystemId(StrEnum):
    """Identifiers of the nineteen superintegrable systems, in catalog order"""

    PERLICK_I = "perlick_i"
    PERLICK_II = "perlick_ii"
    TAUB_NUT = "taub_nut"
    DI_1 = "dI_1"
    DI_2 = "dI_2"
    DI_3 = "dI_3"
    DII_A = "dII_a"
    DII_B = "dII_b"
    DII_C = "dII_c"
    DII_D = "dII_d"
    DIII_A = "dIII_a"
    DIII_B = "dIII_b"
    DIII_C = "dIII_c"
    DIII_D = "dIII_d"
    DIII_E = "dIII_e"
    DIV_A = "dIV_a"
    DIV_B = "dIV_b"
    DIV_C = "dIV_c"
    DIV_D = "dIV_d"
