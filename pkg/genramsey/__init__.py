"""genramsey -- exact computation and verification of generalized Ramsey numbers."""

__title__ = "genramsey"
__version__ = "0.3.0"
__description__ = (
    "Closed forms, witness graphs and an exhaustive oracle for generalized "
    "Ramsey numbers and Turan-type extremal counts."
)
__author__ = "genramsey developers"
__author_email__ = "genramsey@users.noreply.github.com"
__url__ = "https://github.com/genramsey/genramsey"
__license__ = "GNU General Public License v3.0"
