import os

from .singleton import Singleton

__all__ = ['TextTranslation']


# noinspection PyMissingConstructor
class TextTranslation(Singleton):
    """ Dictionary of messages (errors and log lines) in the current language.

    Attributes
    ----------
    current_language : str
        Code of language, 'en' by default.

    dict_trans : dict
        Messages indexed by key.
    """

    def __init__(self):
        self.current_language = 'en'  # Default Language
        self.dict_trans = {}
        self._load_language()

    def get_str(self, name_str):
        """ Gets a message.

        Parameters
        ----------
        name_str : str
            Key of message.

        Returns
        -------
        str
            Returns the message or the key itself when it is not in the dictionary.
        """
        return self.dict_trans.get(name_str, name_str)

    def _load_language(self):
        _dir = os.path.dirname(os.path.abspath(__file__))
        self.dict_trans = {}
        with open(os.path.join(_dir, 'languages', 'dict_language_%s.txt' % self.current_language),
                  encoding="utf-8") as f:
            for line in f:
                if ':' not in line:
                    continue
                (key, val) = line.split(':', 1)
                self.dict_trans[key.strip()] = val.strip()

    def set_current_language(self, name_language):
        self.current_language = name_language
        self._load_language()
