import { HttpApiClient } from './api';
import { ComposerStore } from './store';
import { ComposerView } from './view';
import './styles.css';

const api = new HttpApiClient();
const store = new ComposerStore(api);
const root = document.getElementById('app');
if (!root) throw new Error('missing #app mount point');

new ComposerView(root, store, api);
void store.init('composer session');
